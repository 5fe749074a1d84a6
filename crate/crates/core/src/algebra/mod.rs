//! Exact linear algebra over F2, F3 and the rationals.

pub mod field;
pub mod matrix;

pub use field::{format_rational, parse_rational, rat, ratio, Field, FieldTag, Gf2, Gf3, Scalar};
pub use matrix::Matrix;
