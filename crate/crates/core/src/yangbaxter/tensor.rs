//! Operators on `V (x) V (x) V`, the Yang-Baxter commutator and the
//! star-triangle relation.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};

use super::weights::{component, weights_to_matrix, VertexWeights};

/// Which two tensor factors an operator on `V (x) V` acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slot {
    S12,
    S13,
    S23,
}

/// Extends a 4x4 operator to the 8x8 operator acting on the given factors.
///
/// Basis vectors `v_a v_b v_c` are indexed by `4a + 2b + c`.
pub fn embed(m: &Matrix<BigRational>, slot: Slot) -> Result<Matrix<BigRational>> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::DimensionMismatch(format!("expected a 4x4 operator, got {}x{}", m.rows(), m.cols())));
    }
    let mut out = Matrix::zeros(8, 8);
    for row in 0..8 {
        let (ap, bp, cp) = (row >> 2, (row >> 1) & 1, row & 1);
        for col in 0..8 {
            let (a, b, c) = (col >> 2, (col >> 1) & 1, col & 1);
            let (r, k, spectator) = match slot {
                Slot::S12 => (2 * ap + bp, 2 * a + b, cp == c),
                Slot::S13 => (2 * ap + cp, 2 * a + c, bp == b),
                Slot::S23 => (2 * bp + cp, 2 * b + c, ap == a),
            };
            if spectator {
                out.set(row, col, m.get(r, k).clone());
            }
        }
    }
    Ok(out)
}

/// `R12 S13 T23 - T23 S13 R12`.
pub fn yb_commutator(r: &VertexWeights, s: &VertexWeights, t: &VertexWeights) -> Matrix<BigRational> {
    let r12 = embed(&weights_to_matrix(r), Slot::S12).expect("4x4");
    let s13 = embed(&weights_to_matrix(s), Slot::S13).expect("4x4");
    let t23 = embed(&weights_to_matrix(t), Slot::S23).expect("4x4");
    let lhs = r12.matmul(&s13).and_then(|x| x.matmul(&t23)).expect("8x8");
    let rhs = t23.matmul(&s13).and_then(|x| x.matmul(&r12)).expect("8x8");
    lhs.sub(&rhs).expect("8x8")
}

/// The six external labels of the star-triangle diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryHex {
    pub sigma: u8,
    pub tau: u8,
    pub beta: u8,
    pub theta: u8,
    pub rho: u8,
    pub alpha: u8,
}

impl BoundaryHex {
    /// All 64 label assignments, `sigma` most significant.
    pub fn all() -> impl Iterator<Item = BoundaryHex> {
        (0u8..64).map(|k| BoundaryHex {
            sigma: (k >> 5) & 1,
            tau: (k >> 4) & 1,
            beta: (k >> 3) & 1,
            theta: (k >> 2) & 1,
            rho: (k >> 1) & 1,
            alpha: k & 1,
        })
    }

    /// Commutator entry `(row, col)` holding minus this residual:
    /// row `(theta, rho, alpha)`, column `(sigma, tau, beta)`.
    pub fn commutator_position(&self) -> (usize, usize) {
        let idx = |x: u8, y: u8, z: u8| 4 * x as usize + 2 * y as usize + z as usize;
        (idx(self.theta, self.rho, self.alpha), idx(self.sigma, self.tau, self.beta))
    }
}

/// Left side minus right side of the star-triangle relation:
///
/// `sum_{gamma,mu,nu} R_{sigma tau}^{nu mu} S_{nu beta}^{theta gamma} T_{mu gamma}^{rho alpha}
///  - sum_{delta,phi,psi} T_{tau beta}^{psi delta} S_{sigma delta}^{phi alpha} R_{phi psi}^{theta rho}`.
pub fn star_triangle_residual(
    r: &VertexWeights,
    s: &VertexWeights,
    t: &VertexWeights,
    ext: BoundaryHex,
) -> BigRational {
    let BoundaryHex { sigma, tau, beta, theta, rho, alpha } = ext;
    let mut lhs = BigRational::from_int(0);
    let mut rhs = BigRational::from_int(0);
    for k in 0u8..8 {
        let (x, y, z) = ((k >> 2) & 1, (k >> 1) & 1, k & 1);
        // (gamma, mu, nu) = (x, y, z)
        lhs += component(r, sigma, tau, z, y) * component(s, z, beta, theta, x) * component(t, y, x, rho, alpha);
        // (delta, phi, psi) = (x, y, z)
        rhs += component(t, tau, beta, z, x) * component(s, sigma, x, y, alpha) * component(r, y, z, theta, rho);
    }
    lhs - rhs
}

/// True when every star-triangle residual vanishes.
pub fn star_triangle_holds(r: &VertexWeights, s: &VertexWeights, t: &VertexWeights) -> bool {
    BoundaryHex::all().all(|h| Field::is_zero(&star_triangle_residual(r, s, t, h)))
}
