//! The eight-vertex model as a linear system over F2.
//!
//! A state is admissible when `f[i][j] + g[i][j] + f[i][j+1] + g[i+1][j]` is
//! even at every vertex. These `mn` parities are the coordinates of the
//! defect map `phi`, whose kernel is the set of admissible states.

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::{Field, FieldTag, Gf2, Matrix};
use crate::error::{Error, Result};
use crate::grid::{BoundarySpec, GridShape, LatticeState};
use crate::guard::SizeGuard;

/// The matrix of `phi`: one row per vertex `(i, j)` in lexicographic order,
/// one column per edge, all `f` edges before all `g` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectMap {
    shape: GridShape,
    matrix: Matrix<Gf2>,
}

impl DefectMap {
    pub fn new(shape: GridShape) -> Self {
        let mut matrix = Matrix::zeros(shape.vertex_count(), shape.edge_count());
        for (row, (i, j)) in shape.vertices().enumerate() {
            for e in shape.vertex_edges(i, j) {
                matrix.set(row, e, Gf2::ONE);
            }
        }
        DefectMap { shape, matrix }
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn matrix(&self) -> &Matrix<Gf2> {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Applies `phi` to an edge vector.
    pub fn apply(&self, edges: &[Gf2]) -> Result<Vec<Gf2>> {
        self.matrix.mul_vec(edges)
    }

    /// The submatrix on the given columns, in the given order.
    fn columns(&self, cols: &[usize]) -> Matrix<Gf2> {
        let mut out = Matrix::zeros(self.matrix.rows(), cols.len());
        for r in 0..self.matrix.rows() {
            for (k, &c) in cols.iter().enumerate() {
                out.set(r, k, *self.matrix.get(r, c));
            }
        }
        out
    }
}

fn binary_edges(s: &LatticeState) -> Result<Vec<Gf2>> {
    if !s.is_binary() {
        return Err(Error::Precondition("eight-vertex labels must be 0 or 1".into()));
    }
    Ok(s.edges().into_iter().map(|v| Gf2::new(v as i64)).collect())
}

/// Per-vertex parity defects, vertices in lexicographic order.
pub fn defect_vector(s: &LatticeState) -> Result<Vec<Gf2>> {
    let shape = s.shape();
    binary_edges(s)?;
    Ok(shape
        .vertices()
        .map(|(i, j)| {
            let e = s.edges_at_vertex(i, j).expect("vertex in range");
            Gf2::new((e.left + e.top + e.right + e.bottom) as i64)
        })
        .collect())
}

/// Even parity at every vertex. States with a label outside {0, 1} are not admissible.
pub fn is_admissible_eight(s: &LatticeState) -> bool {
    defect_vector(s).is_ok_and(|d| d.iter().all(Gf2::is_zero))
}

fn pow2(exp: usize) -> BigUint {
    BigUint::one() << exp
}

/// Number of admissible states, `2^(m + n + mn)`.
///
/// Also computed as `2^(edges - rank(phi))`; disagreement is reported as an error.
pub fn count_total(shape: GridShape) -> Result<BigUint> {
    let (m, n) = (shape.m(), shape.n());
    let closed = pow2(m + n + m * n);
    let by_rank = pow2(shape.edge_count() - DefectMap::new(shape).rank());
    if closed != by_rank {
        return Err(Error::Inconsistent(format!("closed form {closed} disagrees with rank count {by_rank}")));
    }
    Ok(closed)
}

/// `sum_i (f[i][1] + f[i][n+1]) + sum_j (g[1][j] + g[m+1][j])` mod 2.
pub fn boundary_parity(b: &BoundarySpec) -> Gf2 {
    b.labels().map(|v| Gf2::new(v as i64)).sum()
}

fn require_binary_boundary(b: &BoundarySpec) -> Result<()> {
    if b.labels().any(|v| v > 1) {
        return Err(Error::Precondition("eight-vertex labels must be 0 or 1".into()));
    }
    Ok(())
}

/// The explicit admissible state with boundary `b`.
///
/// Interior labels are `g[i][j] = 0` for `2 <= i <= m`, `2 <= j <= n`;
/// `g[i][1] = sum_b g[1][b] + sum_{a<i} (f[a][1] + f[a][n+1])`;
/// `f[i][j] = f[i][n+1]` on middle rows; and on the first and last rows
/// `f[1][j] = f[1][n+1] + sum_{b=1}^{n-j+1} g[1][n-b+1]`,
/// `f[m][j] = f[m][n+1] + sum_{b=1}^{n-j+1} g[m+1][n-b+1]`.
pub fn construct_state(b: &BoundarySpec) -> Result<LatticeState> {
    require_binary_boundary(b)?;
    if boundary_parity(b) != Gf2::ZERO {
        return Err(Error::OddBoundary);
    }
    let shape = b.shape;
    let (m, n) = (shape.m(), shape.n());
    let mut s = LatticeState::zero(shape, FieldTag::F2)?;
    let bit = |v: Gf2| v.value();
    let x = |v: u8| Gf2::new(v as i64);

    for i in 1..=m {
        s.set_f(i, 1, b.f_bottom[i - 1]);
        s.set_f(i, n + 1, b.f_top[i - 1]);
    }
    for j in 1..=n {
        s.set_g(1, j, b.g_left[j - 1]);
        s.set_g(m + 1, j, b.g_right[j - 1]);
    }

    let left_sum: Gf2 = b.g_left.iter().map(|&v| x(v)).sum();
    for i in 2..=m {
        let rows: Gf2 = (1..i).map(|a| x(b.f_bottom[a - 1]) + x(b.f_top[a - 1])).sum();
        s.set_g(i, 1, bit(left_sum + rows));
    }
    for i in 2..m {
        for j in 2..=n {
            s.set_f(i, j, b.f_top[i - 1]);
        }
    }
    for j in 2..=n {
        let tail = |col: &[u8]| -> Gf2 { (1..=n - j + 1).map(|bb| x(col[n - bb])).sum() };
        s.set_f(1, j, bit(x(b.f_top[0]) + tail(&b.g_left)));
        s.set_f(m, j, bit(x(b.f_top[m - 1]) + tail(&b.g_right)));
    }
    Ok(s)
}

/// `2^((m-1)(n-1))` for an even boundary, 0 otherwise.
pub fn count_with_boundary(b: &BoundarySpec) -> BigUint {
    if boundary_parity(b) == Gf2::ZERO {
        pow2((b.shape.m() - 1) * (b.shape.n() - 1))
    } else {
        BigUint::default()
    }
}

/// Number of boundaries with even parity, `2^(2m + 2n - 1)`.
pub fn count_valid_boundaries(shape: GridShape) -> BigUint {
    pow2(2 * shape.m() + 2 * shape.n() - 1)
}

/// How [`enumerate_eight`] produces its states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Span a particular solution plus the kernel of `phi`.
    Kernel,
    /// Test every assignment of the free edges.
    BruteForce,
}

/// All admissible eight-vertex states, optionally with a fixed boundary,
/// sorted lexicographically by edge vector and tagged F2.
pub fn enumerate_eight(
    shape: GridShape,
    boundary: Option<&BoundarySpec>,
    strategy: Strategy,
    guard: SizeGuard,
) -> Result<Vec<LatticeState>> {
    if let Some(b) = boundary {
        if b.shape != shape {
            return Err(Error::DimensionMismatch("boundary is for a different shape".into()));
        }
        require_binary_boundary(b)?;
    }
    let mut out = match strategy {
        Strategy::Kernel => enumerate_kernel(shape, boundary, guard)?,
        Strategy::BruteForce => enumerate_brute(shape, boundary, guard)?,
    };
    out.sort();
    Ok(out)
}

fn enumerate_kernel(shape: GridShape, boundary: Option<&BoundarySpec>, guard: SizeGuard) -> Result<Vec<LatticeState>> {
    let phi = DefectMap::new(shape);
    let (base, free_cols) = match boundary {
        None => (vec![Gf2::ZERO; shape.edge_count()], (0..shape.edge_count()).collect::<Vec<_>>()),
        Some(b) => {
            if boundary_parity(b) != Gf2::ZERO {
                return Ok(Vec::new());
            }
            (binary_edges(&construct_state(b)?)?, shape.interior_edges())
        }
    };
    let basis = phi.columns(&free_cols).nullspace_basis();
    guard.check(basis.len() as u32)?;
    let mut out = Vec::with_capacity(1 << basis.len());
    for mask in 0u64..(1u64 << basis.len()) {
        let mut edges = base.clone();
        for (k, v) in basis.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                for (pos, &c) in free_cols.iter().enumerate() {
                    edges[c] = edges[c] + v[pos];
                }
            }
        }
        let labels: Vec<u8> = edges.iter().map(|v| v.value()).collect();
        out.push(LatticeState::from_edges(shape, FieldTag::F2, &labels)?);
    }
    Ok(out)
}

fn enumerate_brute(shape: GridShape, boundary: Option<&BoundarySpec>, guard: SizeGuard) -> Result<Vec<LatticeState>> {
    let e = shape.edge_count();
    guard.check(e as u32)?;
    let mut out = Vec::new();
    let mut labels = vec![0u8; e];
    for mask in 0u64..(1u64 << e) {
        for (k, l) in labels.iter_mut().enumerate() {
            *l = ((mask >> (e - 1 - k)) & 1) as u8;
        }
        let s = LatticeState::from_edges(shape, FieldTag::F2, &labels)?;
        if is_admissible_eight(&s) && boundary.is_none_or(|b| b.matches(&s)) {
            out.push(s);
        }
    }
    Ok(out)
}
