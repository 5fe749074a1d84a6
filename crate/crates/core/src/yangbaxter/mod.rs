//! Eight-vertex Boltzmann weights and the Yang-Baxter equation over the rationals.

pub mod conditions;
pub mod equations;
pub mod partition;
pub mod sample;
pub mod solver;
pub mod tensor;
pub mod weights;

pub use conditions::{alpha, beta, check_necessary_conditions, f_invariant, g_invariant, minors, ConditionReport};
pub use equations::{residuals28, Residual, EQUATION_TEXT, IJ_ORDER};
pub use partition::{partition_function, state_weight, Model};
pub use solver::{commutator_matrix, solve_r, RSolution, Witness, SCAN_COEFFICIENTS};
pub use tensor::{embed, star_triangle_holds, star_triangle_residual, yb_commutator, BoundaryHex, Slot};
pub use weights::{component, matrix_to_weights, weights_to_matrix, Sign, VertexWeights, WEIGHT_KEYS};
