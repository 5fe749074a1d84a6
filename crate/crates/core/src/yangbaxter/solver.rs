//! Solving `[[R, S, T]] = 0` for `R` with `S` and `T` fixed.

use num_rational::BigRational;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::{Field, Matrix};

use super::tensor::yb_commutator;
use super::weights::VertexWeights;

/// Coefficients tried for each basis vector when scanning for a witness.
pub const SCAN_COEFFICIENTS: [i64; 5] = [-2, -1, 0, 1, 2];

/// The 64x8 matrix sending the weight vector of `R` to the flattened
/// commutator `[[R, S, T]]` (row-major).
pub fn commutator_matrix(s: &VertexWeights, t: &VertexWeights) -> Matrix<BigRational> {
    let mut m = Matrix::zeros(64, 8);
    for k in 0..8 {
        let mut unit = [0i64; 8];
        unit[k] = 1;
        let c = yb_commutator(&VertexWeights::from_ints(unit), s, t);
        for (row, v) in c.entries().iter().enumerate() {
            m.set(row, k, v.clone());
        }
    }
    m
}

/// Whether the scan found an `R` with all four `c` and `d` weights nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Found(Box<VertexWeights>),
    NoneFoundInScan,
}

/// The solution space of `[[R, S, T]] = 0` in `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSolution {
    pub basis: Vec<VertexWeights>,
    pub witness: Witness,
}

impl RSolution {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

impl Serialize for RSolution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RSolution", 4)?;
        st.serialize_field("dimension", &self.dimension())?;
        st.serialize_field("basis", &self.basis)?;
        match &self.witness {
            Witness::Found(w) => {
                st.serialize_field("nonzero_cd", "found")?;
                st.serialize_field("witness", w)?;
            }
            Witness::NoneFoundInScan => {
                st.serialize_field("nonzero_cd", "none found in scan")?;
                st.serialize_field("witness", &Option::<VertexWeights>::None)?;
            }
        }
        st.end()
    }
}

fn has_nonzero_cd(w: &VertexWeights) -> bool {
    [&w.c1, &w.c_neg1, &w.d1, &w.d_neg1].iter().all(|v| !Field::is_zero(*v))
}

/// Nullspace of [`commutator_matrix`], plus a scan of integer combinations of
/// the basis with coefficients in [`SCAN_COEFFICIENTS`] for a solution whose
/// `c` and `d` weights are all nonzero. Combinations are tried in odometer
/// order with the first basis vector varying slowest.
pub fn solve_r(s: &VertexWeights, t: &VertexWeights) -> RSolution {
    let basis: Vec<VertexWeights> = commutator_matrix(s, t)
        .nullspace_basis()
        .into_iter()
        .map(|v| VertexWeights::from_slice(&v).expect("eight entries"))
        .collect();
    let mut witness = Witness::NoneFoundInScan;
    let mut digits = vec![0usize; basis.len()];
    'scan: loop {
        let mut w = VertexWeights::zero();
        for (b, &d) in basis.iter().zip(&digits) {
            w = w.add(&b.scale(&BigRational::from_int(SCAN_COEFFICIENTS[d])));
        }
        if has_nonzero_cd(&w) {
            witness = Witness::Found(Box::new(w));
            break;
        }
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                break 'scan;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < SCAN_COEFFICIENTS.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
    RSolution { basis, witness }
}
