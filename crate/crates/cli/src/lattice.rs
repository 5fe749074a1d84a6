//! `count`, `enumerate` and `partition`.

use std::path::PathBuf;

use latticeforms::algebra::FieldTag;
use latticeforms::eightvertex::{
    boundary_parity, count_total, count_valid_boundaries, count_with_boundary, enumerate_eight, Strategy,
};
use latticeforms::forms::{count_colorings, count_six, enumerate_six, is_admissible_six};
use latticeforms::toroidal::{enumerate_toroidal, has_toroidal_boundary, require_prime_to_three};
use latticeforms::yangbaxter::{partition_function, Model};
use latticeforms::{BoundarySpec, GridShape, LatticeState, SizeGuard};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::inputs::{big_json, boundary_for, rational_json, read_weights, shape_json, ShapeArgs};
use crate::output::{Output, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ModelArg {
    Six,
    Eight,
    Toroidal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum StrategyArg {
    Kernel,
    BruteForce,
}

#[derive(Debug, clap::Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Boundary JSON file; only states with these boundary labels are counted.
    #[arg(long)]
    pub boundary: Option<PathBuf>,
    /// Also count proper 3-colorings of the (m+1) x (n+1) grid (six-vertex only).
    #[arg(long)]
    pub check_colorings: bool,
    /// Cross-check against a brute-force filter over all labelings.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, clap::Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long)]
    pub boundary: Option<PathBuf>,
    /// Eight-vertex search method.
    #[arg(long, value_enum, default_value_t = StrategyArg::Kernel)]
    pub strategy: StrategyArg,
}

#[derive(Debug, clap::Args)]
pub struct PartitionArgs {
    /// `six` or `eight`.
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Weights JSON file with keys a1, a-1, b1, b-1, c1, c-1, d1, d-1.
    #[arg(long)]
    pub weights: PathBuf,
    #[arg(long)]
    pub boundary: Option<PathBuf>,
}

fn reject_boundary(model: ModelArg, boundary: &Option<PathBuf>) -> CliResult<()> {
    if model == ModelArg::Toroidal && boundary.is_some() {
        return Err(CliError::Usage("--boundary does not apply to the toroidal model".into()));
    }
    Ok(())
}

fn all_labelings(shape: GridShape, field: FieldTag, guard: SizeGuard) -> CliResult<impl Iterator<Item = LatticeState>> {
    let e = shape.edge_count();
    guard.check(e as u32)?;
    Ok((0u64..1 << e).map(move |mask| {
        let labels: Vec<u8> = (0..e).map(|k| (mask >> (e - 1 - k) & 1) as u8).collect();
        LatticeState::from_edges(shape, field, &labels).expect("binary labels")
    }))
}

fn six_states(shape: GridShape, boundary: Option<&BoundarySpec>, guard: SizeGuard) -> CliResult<Vec<LatticeState>> {
    let all = enumerate_six(shape, guard)?;
    Ok(match boundary {
        Some(b) => all.into_iter().filter(|s| b.matches(s)).collect(),
        None => all,
    })
}

fn base(model: ModelArg, shape: GridShape, boundary: Option<&BoundarySpec>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("model".into(), json!(model_name(model)));
    m.insert("shape".into(), shape_json(shape));
    if let Some(b) = boundary {
        m.insert("boundary".into(), b.to_json_value());
    }
    m
}

fn model_name(model: ModelArg) -> &'static str {
    match model {
        ModelArg::Six => "six",
        ModelArg::Eight => "eight",
        ModelArg::Toroidal => "toroidal",
    }
}

fn oracle_json(expected: &BigUint, brute: u64) -> (Value, bool) {
    let ok = *expected == BigUint::from(brute);
    (json!({"method": "brute force over all labelings", "count": brute, "match": ok}), ok)
}

pub fn count(args: &CountArgs, guard: SizeGuard) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    reject_boundary(args.model, &args.boundary)?;
    if args.check_colorings && args.model != ModelArg::Six {
        return Err(CliError::Usage("--check-colorings applies to the six-vertex model".into()));
    }
    if args.check_colorings && args.boundary.is_some() {
        return Err(CliError::Usage("--check-colorings counts all states and takes no --boundary".into()));
    }
    let boundary = boundary_for(args.boundary.as_ref(), shape)?;
    let mut out = base(args.model, shape, boundary.as_ref());
    let mut ok = true;
    match args.model {
        ModelArg::Six => {
            let n = match &boundary {
                Some(b) => six_states(shape, Some(b), guard)?.len() as u64,
                None => count_six(shape, guard)?,
            };
            out.insert("states".into(), json!(n));
            if args.check_colorings {
                let colorings = count_colorings(shape.m() + 1, shape.n() + 1, guard)?;
                let matched = colorings == 3 * n;
                out.insert("colorings".into(), json!(colorings));
                out.insert("match".into(), json!(matched));
                ok &= matched;
            }
            if args.oracle {
                let brute = all_labelings(shape, FieldTag::F3, guard)?
                    .filter(|s| is_admissible_six(s).unwrap_or(false))
                    .filter(|s| boundary.as_ref().is_none_or(|b| b.matches(s)))
                    .count() as u64;
                let (v, good) = oracle_json(&BigUint::from(n), brute);
                out.insert("oracle".into(), v);
                ok &= good;
            }
        }
        ModelArg::Eight => {
            let expected = match &boundary {
                Some(b) => {
                    out.insert("parity".into(), json!(boundary_parity(b).value()));
                    let c = count_with_boundary(b);
                    out.insert("count".into(), big_json(&c));
                    c
                }
                None => {
                    let t = count_total(shape)?;
                    out.insert("total".into(), big_json(&t));
                    out.insert("valid_boundaries".into(), big_json(&count_valid_boundaries(shape)));
                    t
                }
            };
            if args.oracle {
                let brute = enumerate_eight(shape, boundary.as_ref(), Strategy::BruteForce, guard)?.len() as u64;
                let (v, good) = oracle_json(&expected, brute);
                out.insert("oracle".into(), v);
                ok &= good;
            }
        }
        ModelArg::Toroidal => {
            require_prime_to_three(shape)?;
            let n = enumerate_toroidal(shape, guard)?.len() as u64;
            out.insert("states".into(), json!(n));
            if args.oracle {
                let brute = all_labelings(shape, FieldTag::F3, guard)?
                    .filter(|s| has_toroidal_boundary(s) && is_admissible_six(s).unwrap_or(false))
                    .count() as u64;
                let (v, good) = oracle_json(&BigUint::from(n), brute);
                out.insert("oracle".into(), v);
                ok &= good;
            }
        }
    }
    Ok(Output::new(Value::Object(out)).with_ok(ok))
}

/// One CSV row per state: an index column, then every edge label in global order.
fn state_table(shape: GridShape, states: &[LatticeState]) -> Table {
    let mut header = vec!["index".to_string()];
    for i in 1..=shape.m() {
        for j in 1..=shape.n() + 1 {
            header.push(format!("f_{i}_{j}"));
        }
    }
    for i in 1..=shape.m() + 1 {
        for j in 1..=shape.n() {
            header.push(format!("g_{i}_{j}"));
        }
    }
    let rows = states
        .iter()
        .enumerate()
        .map(|(k, s)| std::iter::once(k.to_string()).chain(s.edges().iter().map(u8::to_string)).collect())
        .collect();
    Table { header, rows }
}

pub fn enumerate(args: &EnumerateArgs, guard: SizeGuard) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    reject_boundary(args.model, &args.boundary)?;
    let boundary = boundary_for(args.boundary.as_ref(), shape)?;
    let states = match args.model {
        ModelArg::Six => six_states(shape, boundary.as_ref(), guard)?,
        ModelArg::Eight => {
            let strategy = match args.strategy {
                StrategyArg::Kernel => Strategy::Kernel,
                StrategyArg::BruteForce => Strategy::BruteForce,
            };
            enumerate_eight(shape, boundary.as_ref(), strategy, guard)?
        }
        ModelArg::Toroidal => {
            require_prime_to_three(shape)?;
            enumerate_toroidal(shape, guard)?
        }
    };
    let mut out = base(args.model, shape, boundary.as_ref());
    out.insert("count".into(), json!(states.len()));
    out.insert("states".into(), Value::Array(states.iter().map(LatticeState::to_json_value).collect()));
    Ok(Output::new(Value::Object(out)).with_table(state_table(shape, &states)))
}

pub fn partition(args: &PartitionArgs, guard: SizeGuard) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    let model = match args.model {
        ModelArg::Six => Model::Six,
        ModelArg::Eight => Model::Eight,
        ModelArg::Toroidal => return Err(CliError::Usage("partition supports the six and eight models".into())),
    };
    let w = read_weights(&args.weights)?;
    let boundary = boundary_for(args.boundary.as_ref(), shape)?;
    let z = partition_function(&w, shape, model, boundary.as_ref(), guard)?;
    let mut out = base(args.model, shape, boundary.as_ref());
    out.insert("weights".into(), serde_json::from_str(&w.to_json()).expect("weights JSON"));
    out.insert("partition_function".into(), rational_json(&z));
    Ok(Output::new(Value::Object(out)))
}
