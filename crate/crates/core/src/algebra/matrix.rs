//! Dense matrices over a [`Field`] with row reduction.

use std::fmt;

use crate::algebra::field::Field;
use crate::error::{Error, Result};

/// A dense row-major matrix. All entries live in the same field `K`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = K::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<K>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries given for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| K::from_int(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix<K>) -> Result<Matrix<K>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * rhs.cols + c;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[K]) -> Result<Vec<K>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(K::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn add(&self, rhs: &Matrix<K>) -> Result<Matrix<K>> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix<K>) -> Result<Matrix<K>> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, k: &K) -> Matrix<K> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * k.clone()).collect() }
    }

    fn zip_with(&self, rhs: &Matrix<K>, f: impl Fn(K, K) -> K) -> Result<Matrix<K>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a.clone(), b.clone())).collect(),
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix<K>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for col in 0..m.cols {
            if lead_row == m.rows {
                break;
            }
            let Some(p) = (lead_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead_row);
            let inv = m.get(lead_row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(lead_row, c).clone() * inv.clone();
                m.set(lead_row, c, v);
            }
            for r in 0..m.rows {
                if r == lead_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(lead_row, c).clone();
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            lead_row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Matrix<K> {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column in
    /// ascending column order. Each vector has a 1 at its free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![K::zero(); self.cols];
                v[free] = K::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, free).clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<K: fmt::Display> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> =
                self.data[r * self.cols..(r + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{Gf2, Gf3};
    use num_rational::BigRational;

    #[test]
    fn rref_of_identity_and_zero() {
        let i3 = Matrix::<Gf3>::identity(3);
        assert_eq!(i3.rref(), i3);
        let z = Matrix::<Gf2>::zeros(2, 4);
        assert_eq!(z.rref(), z);
        assert_eq!(z.rank(), 0);
        assert_eq!(Matrix::<Gf2>::identity(4).rank(), 4);
    }

    #[test]
    fn rref_small_f2() {
        let m = Matrix::<Gf2>::from_ints(&[&[1, 1], &[1, 0]]).unwrap();
        assert_eq!(m.rref(), Matrix::identity(2));
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::<Gf3>::identity(3).nullspace_basis().is_empty());
        let z = Matrix::<Gf3>::zeros(1, 3);
        let basis = z.nullspace_basis();
        assert_eq!(basis.len(), 3);
        for (k, v) in basis.iter().enumerate() {
            for (c, x) in v.iter().enumerate() {
                assert_eq!(*x, if c == k { Gf3::ONE } else { Gf3::ZERO });
            }
        }
        // Exhausting all 8 vectors of F2^3 leaves only (1,1,1) besides 0.
        let m = Matrix::<Gf2>::from_ints(&[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        let basis = m.nullspace_basis();
        assert_eq!(basis, vec![vec![Gf2::ONE, Gf2::ONE, Gf2::ONE]]);
    }

    #[test]
    fn matmul_examples() {
        let a = Matrix::<BigRational>::from_ints(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(Matrix::identity(2).matmul(&a).unwrap(), a);
        assert!(a.matmul(&Matrix::zeros(2, 2)).unwrap().is_zero());
        let u = Matrix::<Gf2>::from_ints(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(u.matmul(&u).unwrap(), Matrix::identity(2));
        assert!(a.matmul(&Matrix::zeros(3, 1)).is_err());
    }
}
