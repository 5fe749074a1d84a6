//! Exact combinatorics of six- and eight-vertex lattice models.
//!
//! Lattice states on an `m x n` grid, discrete 1-forms over F3 on rectangles
//! and tori, the F2-linear structure of eight-vertex states, and the
//! Yang-Baxter equation for eight-vertex weights over the rationals.

pub mod algebra;
pub mod eightvertex;
pub mod error;
pub mod fixtures;
pub mod forms;
pub mod grid;
pub mod guard;
pub mod toroidal;
pub mod yangbaxter;

pub use error::{Error, Result};
pub use grid::{BoundarySpec, Grid2, GridShape, LatticeState};
pub use guard::SizeGuard;
