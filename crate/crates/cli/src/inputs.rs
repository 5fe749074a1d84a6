use std::path::{Path, PathBuf};

use latticeforms::algebra::{format_rational, Gf3};
use latticeforms::grid::Grid2;
use latticeforms::yangbaxter::VertexWeights;
use latticeforms::{BoundarySpec, GridShape, LatticeState};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, clap::Args)]
pub struct ShapeArgs {
    /// Number of vertex columns.
    #[arg(long)]
    pub m: usize,
    /// Number of vertex rows.
    #[arg(long)]
    pub n: usize,
}

impl ShapeArgs {
    pub fn shape(&self) -> CliResult<GridShape> {
        Ok(GridShape::new(self.m, self.n)?)
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn with_path<T>(path: &Path, r: latticeforms::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::Input { path: path.to_path_buf(), source })
}

pub fn read_state(path: &Path) -> CliResult<LatticeState> {
    with_path(path, LatticeState::deserialize(&read(path)?))
}

pub fn read_boundary(path: &Path) -> CliResult<BoundarySpec> {
    with_path(path, BoundarySpec::deserialize(&read(path)?))
}

pub fn read_weights(path: &Path) -> CliResult<VertexWeights> {
    with_path(path, VertexWeights::from_json(&read(path)?))
}

/// Reads an optional boundary file and checks it against `shape`.
pub fn boundary_for(path: Option<&PathBuf>, shape: GridShape) -> CliResult<Option<BoundarySpec>> {
    let Some(p) = path else { return Ok(None) };
    let b = read_boundary(p)?;
    if b.shape != shape {
        return Err(CliError::Usage(format!(
            "{}: boundary is for shape {}x{}, not {}x{}",
            p.display(),
            b.shape.m(),
            b.shape.n(),
            shape.m(),
            shape.n()
        )));
    }
    Ok(Some(b))
}

/// A JSON number when it fits in `u64`, otherwise a decimal string.
pub fn big_json(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

pub fn rational_json(q: &BigRational) -> Value {
    json!(format_rational(q))
}

pub fn gf3_grid(g: &Grid2<Gf3>) -> Vec<Vec<u8>> {
    g.map(|v| v.value()).to_nested()
}

pub fn shape_json(shape: GridShape) -> Value {
    json!({"m": shape.m(), "n": shape.n()})
}
