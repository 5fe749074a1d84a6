//! Boltzmann weights of the eight vertex configurations and their R-matrix.

use std::fmt;
use std::ops::Neg;

use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, Field, Matrix};
use crate::error::{Error, Result};

/// A subscript `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

/// The weights `a_{±1}, b_{±1}, c_{±1}, d_{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexWeights {
    pub a1: BigRational,
    pub a_neg1: BigRational,
    pub b1: BigRational,
    pub b_neg1: BigRational,
    pub c1: BigRational,
    pub c_neg1: BigRational,
    pub d1: BigRational,
    pub d_neg1: BigRational,
}

/// JSON keys in the order of [`VertexWeights::to_vec`].
pub const WEIGHT_KEYS: [&str; 8] = ["a1", "a-1", "b1", "b-1", "c1", "c-1", "d1", "d-1"];

impl VertexWeights {
    /// From `[a1, a-1, b1, b-1, c1, c-1, d1, d-1]`.
    pub fn from_slice(v: &[BigRational]) -> Result<Self> {
        let [a1, a_neg1, b1, b_neg1, c1, c_neg1, d1, d_neg1]: [BigRational; 8] = v
            .to_vec()
            .try_into()
            .map_err(|_| Error::DimensionMismatch(format!("eight weights expected, found {}", v.len())))?;
        Ok(VertexWeights { a1, a_neg1, b1, b_neg1, c1, c_neg1, d1, d_neg1 })
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        Self::from_slice(&v.map(BigRational::from_int)).expect("eight entries")
    }

    /// `[a1, a-1, b1, b-1, c1, c-1, d1, d-1]`.
    pub fn to_vec(&self) -> Vec<BigRational> {
        vec![
            self.a1.clone(),
            self.a_neg1.clone(),
            self.b1.clone(),
            self.b_neg1.clone(),
            self.c1.clone(),
            self.c_neg1.clone(),
            self.d1.clone(),
            self.d_neg1.clone(),
        ]
    }

    /// The `k`-th weight in [`VertexWeights::to_vec`] order.
    pub fn entry(&self, k: usize) -> &BigRational {
        match k {
            0 => &self.a1,
            1 => &self.a_neg1,
            2 => &self.b1,
            3 => &self.b_neg1,
            4 => &self.c1,
            5 => &self.c_neg1,
            6 => &self.d1,
            7 => &self.d_neg1,
            _ => panic!("weight index {k} out of range"),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints([0; 8])
    }

    /// `a = b = 1`, `c = d = 0`; its matrix is the identity.
    pub fn identity() -> Self {
        Self::from_ints([1, 1, 1, 1, 0, 0, 0, 0])
    }

    pub fn ones() -> Self {
        Self::from_ints([1; 8])
    }

    pub fn a(&self, s: Sign) -> &BigRational {
        match s {
            Sign::Plus => &self.a1,
            Sign::Minus => &self.a_neg1,
        }
    }

    pub fn b(&self, s: Sign) -> &BigRational {
        match s {
            Sign::Plus => &self.b1,
            Sign::Minus => &self.b_neg1,
        }
    }

    pub fn c(&self, s: Sign) -> &BigRational {
        match s {
            Sign::Plus => &self.c1,
            Sign::Minus => &self.c_neg1,
        }
    }

    pub fn d(&self, s: Sign) -> &BigRational {
        match s {
            Sign::Plus => &self.d1,
            Sign::Minus => &self.d_neg1,
        }
    }

    pub fn all_nonzero(&self) -> bool {
        self.to_vec().iter().all(|w| !Field::is_zero(w))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_slice(&self.to_vec().into_iter().map(|w| w * k).collect::<Vec<_>>()).expect("eight entries")
    }

    pub fn add(&self, rhs: &VertexWeights) -> Self {
        let v: Vec<BigRational> = self.to_vec().into_iter().zip(rhs.to_vec()).map(|(a, b)| a + b).collect();
        Self::from_slice(&v).expect("eight entries")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("weights serialize")
    }
}

impl Serialize for VertexWeights {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(8))?;
        for (k, v) in WEIGHT_KEYS.iter().zip(self.to_vec()) {
            map.serialize_entry(k, &format_rational(&v))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for VertexWeights {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = serde_json::Map::<String, serde_json::Value>::deserialize(d)?;
        if let Some(k) = map.keys().find(|k| !WEIGHT_KEYS.contains(&k.as_str())) {
            return Err(de::Error::custom(format!("unknown weight `{k}`")));
        }
        let mut out = Vec::with_capacity(8);
        for k in WEIGHT_KEYS {
            let v = map.get(k).ok_or_else(|| de::Error::custom(format!("missing weight `{k}`")))?;
            let q = match v {
                serde_json::Value::String(s) => parse_rational(s),
                serde_json::Value::Number(n) => n.as_i64().map(BigRational::from_int),
                _ => None,
            }
            .ok_or_else(|| de::Error::custom(format!("weight `{k}` is not a rational: {v}")))?;
            out.push(q);
        }
        VertexWeights::from_slice(&out).map_err(de::Error::custom)
    }
}

/// Positions `(row, col)` of the eight weights in the 4x4 matrix, in
/// [`VertexWeights::to_vec`] order.
const PATTERN: [(usize, usize); 8] = [(0, 0), (3, 3), (1, 1), (2, 2), (1, 2), (2, 1), (0, 3), (3, 0)];

/// The matrix with rows `(a1 . . d1 / . b1 c1 . / . c-1 b-1 . / d-1 . . a-1)`
/// in the basis `v0v0, v0v1, v1v0, v1v1`.
pub fn weights_to_matrix(w: &VertexWeights) -> Matrix<BigRational> {
    let mut m = Matrix::zeros(4, 4);
    for (&(r, c), v) in PATTERN.iter().zip(w.to_vec()) {
        m.set(r, c, v);
    }
    m
}

/// Inverse of [`weights_to_matrix`]; fails on a nonzero entry outside the pattern.
pub fn matrix_to_weights(m: &Matrix<BigRational>) -> Result<VertexWeights> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::DimensionMismatch(format!("R-matrix must be 4x4, got {}x{}", m.rows(), m.cols())));
    }
    for r in 0..4 {
        for c in 0..4 {
            if !PATTERN.contains(&(r, c)) && !Field::is_zero(m.get(r, c)) {
                return Err(Error::Precondition(format!(
                    "nonzero entry at ({r}, {c}) outside the eight-vertex pattern"
                )));
            }
        }
    }
    VertexWeights::from_slice(&PATTERN.iter().map(|&(r, c)| m.get(r, c).clone()).collect::<Vec<_>>())
}

/// `R_{nu beta}^{theta gamma}`: the entry at row `2 theta + gamma`, column `2 nu + beta`.
///
/// This is the weight of the vertex with left edge `nu`, top edge `beta`,
/// right edge `theta` and bottom edge `gamma`.
pub fn component(w: &VertexWeights, nu: u8, beta: u8, theta: u8, gamma: u8) -> BigRational {
    let col = 2 * (nu as usize & 1) + (beta as usize & 1);
    let row = 2 * (theta as usize & 1) + (gamma as usize & 1);
    PATTERN.iter().position(|&p| p == (row, col)).map_or_else(|| BigRational::from_int(0), |k| w.entry(k).clone())
}
