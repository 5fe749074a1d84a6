//! Exact partition functions on small rectangles.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::Field;
use crate::eightvertex::{enumerate_eight, Strategy};
use crate::error::{Error, Result};
use crate::forms::enumerate_six;
use crate::grid::{BoundarySpec, GridShape, LatticeState};
use crate::guard::SizeGuard;

use super::weights::{component, VertexWeights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Six,
    Eight,
}

/// Product over vertices of `component(left, top, right, bottom)`.
pub fn state_weight(w: &VertexWeights, s: &LatticeState) -> BigRational {
    s.shape().vertices().fold(BigRational::from_int(1), |acc, (i, j)| {
        let e = s.edges_at_vertex(i, j).expect("vertex in range");
        acc * component(w, e.left, e.top, e.right, e.bottom)
    })
}

/// Sum of [`state_weight`] over all admissible states, optionally with a fixed boundary.
///
/// The six-vertex model never uses the `d` weights; they must be zero.
pub fn partition_function(
    w: &VertexWeights,
    shape: GridShape,
    model: Model,
    boundary: Option<&BoundarySpec>,
    guard: SizeGuard,
) -> Result<BigRational> {
    if let Some(b) = boundary {
        if b.shape != shape {
            return Err(Error::DimensionMismatch("boundary is for a different shape".into()));
        }
    }
    let states = match model {
        Model::Six => {
            if !Field::is_zero(&w.d1) || !Field::is_zero(&w.d_neg1) {
                return Err(Error::Precondition("six-vertex weights must have d1 = d-1 = 0".into()));
            }
            let all = enumerate_six(shape, guard)?;
            match boundary {
                Some(b) => all.into_iter().filter(|s| b.matches(s)).collect(),
                None => all,
            }
        }
        Model::Eight => enumerate_eight(shape, boundary, Strategy::Kernel, guard)?,
    };
    Ok(states.iter().fold(BigRational::from_int(0), |acc, s| acc + state_weight(w, s)))
}
