//! Hand-transcribed reference states.

use crate::grid::LatticeState;

/// A 5x3 admissible six-vertex state used throughout the test suite.
pub const RECT_5X3_JSON: &str = include_str!("../fixtures/rect_5x3.json");

/// A 5x3 admissible six-vertex state with toroidal boundary labels.
pub const TORUS_5X3_JSON: &str = include_str!("../fixtures/torus_5x3.json");

pub fn rect_5x3() -> LatticeState {
    LatticeState::deserialize(RECT_5X3_JSON).expect("rect_5x3 fixture parses")
}

pub fn torus_5x3() -> LatticeState {
    LatticeState::deserialize(TORUS_5X3_JSON).expect("torus_5x3 fixture parses")
}
