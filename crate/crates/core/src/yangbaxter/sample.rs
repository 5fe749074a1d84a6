//! Seeded random weights, including triples known to satisfy the Yang-Baxter equation.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::algebra::{Field, Matrix};

use super::weights::{matrix_to_weights, weights_to_matrix, VertexWeights};

/// A nonzero rational `p/q` with `1 <= |p| <= 9`, `1 <= q <= 5`.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let p: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let q: i64 = rng.gen_range(1..=5);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Eight independent nonzero weights.
pub fn random_weights<R: Rng + ?Sized>(rng: &mut R) -> VertexWeights {
    let v: Vec<BigRational> = (0..8).map(|_| random_nonzero(rng)).collect();
    VertexWeights::from_slice(&v).expect("eight entries")
}

/// `a = b = x`, `c = d = y`: the operator `x I + y (X (x) X)`. Any three of these commute.
pub fn symmetric_family(x: BigRational, y: BigRational) -> VertexWeights {
    VertexWeights {
        a1: x.clone(),
        a_neg1: x.clone(),
        b1: x.clone(),
        b_neg1: x,
        c1: y.clone(),
        c_neg1: y.clone(),
        d1: y.clone(),
        d_neg1: y,
    }
}

/// Conjugates the R-matrix by `diag(1, l1) (x) diag(1, l2)`.
pub fn gauge(w: &VertexWeights, l1: &BigRational, l2: &BigRational) -> VertexWeights {
    let one = BigRational::from_int(1);
    let diag = [one.clone(), l2.clone(), l1.clone(), l1 * l2];
    let mut d = Matrix::zeros(4, 4);
    let mut d_inv = Matrix::zeros(4, 4);
    for (k, v) in diag.iter().enumerate() {
        d.set(k, k, v.clone());
        d_inv.set(k, k, v.inv().expect("gauge factors are nonzero"));
    }
    let m = d.matmul(&weights_to_matrix(w)).and_then(|x| x.matmul(&d_inv)).expect("4x4");
    matrix_to_weights(&m).expect("diagonal conjugation keeps the pattern")
}

/// A triple `(R, S, T)` with `[[R, S, T]] = 0` and every weight nonzero.
///
/// Each member is a random symmetric-family operator; `R`, `S`, `T` are then
/// conjugated on factors `(1,2)`, `(1,3)`, `(2,3)` by the same three diagonal
/// matrices, which preserves the vanishing of the commutator.
pub fn solvable_triple<R: Rng + ?Sized>(rng: &mut R) -> (VertexWeights, VertexWeights, VertexWeights) {
    let l: Vec<BigRational> = (0..3).map(|_| random_nonzero(rng)).collect();
    let mut member = |a: &BigRational, b: &BigRational| {
        let base = symmetric_family(random_nonzero(rng), random_nonzero(rng));
        gauge(&base, a, b)
    };
    let r = member(&l[0], &l[1]);
    let s = member(&l[0], &l[2]);
    let t = member(&l[1], &l[2]);
    (r, s, t)
}
