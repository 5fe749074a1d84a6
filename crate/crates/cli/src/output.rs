use std::io::Write;

use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Rows for CSV output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Result of one command.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    /// Overrides the default key/value flattening in CSV mode.
    pub table: Option<Table>,
    /// False when a verification failed; maps to exit code 1.
    pub ok: bool,
}

impl Output {
    pub fn new(json: Value) -> Self {
        Output { json, table: None, ok: true }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

/// `key,value` rows with nested keys joined by `.` and array positions as indices.
pub fn flatten(v: &Value) -> Table {
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<Vec<String>>) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(map) => map.iter().for_each(|(k, x)| walk(&join(k), x, rows)),
            Value::Array(items) => items.iter().enumerate().for_each(|(i, x)| walk(&join(&i.to_string()), x, rows)),
            Value::String(s) => rows.push(vec![prefix.to_string(), s.clone()]),
            Value::Null => rows.push(vec![prefix.to_string(), String::new()]),
            other => rows.push(vec![prefix.to_string(), other.to_string()]),
        }
    }
    let mut rows = Vec::new();
    walk("", v, &mut rows);
    Table { header: vec!["key".into(), "value".into()], rows }
}

pub fn render(out: &Output, format: Format, w: &mut impl Write) -> CliResult<()> {
    let err = |e: &dyn std::fmt::Display| CliError::Output(e.to_string());
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, &out.json).map_err(|e| err(&e))?;
            writeln!(w).map_err(|e| err(&e))
        }
        Format::Csv => {
            let table = out.table.clone().unwrap_or_else(|| flatten(&out.json));
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(&table.header).map_err(|e| err(&e))?;
            for row in &table.rows {
                csv.write_record(row).map_err(|e| err(&e))?;
            }
            csv.flush().map_err(|e| err(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flatten_nested() {
        let t = flatten(&json!({"a": {"b": [1, "x"]}, "c": true, "d": null}));
        assert_eq!(
            t.rows,
            vec![
                vec!["a.b.0".to_string(), "1".into()],
                vec!["a.b.1".into(), "x".into()],
                vec!["c".into(), "true".into()],
                vec!["d".into(), "".into()],
            ]
        );
    }
}
