//! The Yang-Baxter commutator written as 28 polynomial equations in the weights.

use num_rational::BigRational;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::format_rational;

use super::weights::{Sign, VertexWeights};

/// Text of the ten equation families, `i` and `j` ranging over `±1`.
pub const EQUATION_TEXT: [&str; 10] = [
    "a_j(T)a_j(S)d_i(R) + d_i(T)c_i(S)a_{-j}(R) = c_i(T)d_i(S)a_j(R) + b_{-j}(T)b_{-j}(S)d_i(R)",
    "d_i(T)b_j(S)c_i(R) + a_j(T)d_i(S)b_{-j}(R) = b_j(T)d_i(S)a_j(R) + c_{-i}(T)b_{-j}(S)d_i(R)",
    "d_i(T)b_j(S)b_j(R) + a_j(T)d_i(S)c_{-i}(R) = d_i(T)a_j(S)a_j(R) + a_{-j}(T)c_{-i}(S)d_i(R)",
    "c_i(T)a_j(S)c_i(R) + b_j(T)c_i(S)b_{-j}(R) = a_j(T)c_i(S)a_j(R) + d_{-i}(T)a_{-j}(S)d_i(R)",
    "c_i(T)a_j(S)b_j(R) + b_j(T)c_i(S)c_{-i}(R) = c_i(T)b_j(S)a_j(R) + b_{-j}(T)d_{-i}(S)d_i(R)",
    "b_{-j}(T)a_j(S)c_i(R) + c_{-i}(T)c_i(S)b_{-j}(R) = d_{-i}(T)d_i(S)b_j(R) + a_j(T)b_{-j}(S)c_i(R)",
    "c_1(T)c_{-1}(S)c_1(R) = c_{-1}(T)c_1(S)c_{-1}(R)",
    "d_1(T)c_1(S)d_{-1}(R) = d_{-1}(T)c_{-1}(S)d_1(R)",
    "c_1(T)d_1(S)d_{-1}(R) = c_{-1}(T)d_{-1}(S)d_1(R)",
    "d_1(T)d_{-1}(S)c_1(R) = d_{-1}(T)d_1(S)c_{-1}(R)",
];

/// `(i, j)` in the order used by [`residuals28`].
pub const IJ_ORDER: [(Sign, Sign); 4] =
    [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus), (Sign::Minus, Sign::Minus)];

/// One equation of the system, evaluated as left side minus right side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    /// 1-based equation family, 1 to 10.
    pub equation: usize,
    /// `(i, j)` for families 1 to 6.
    pub ij: Option<(Sign, Sign)>,
    pub value: BigRational,
}

impl Residual {
    pub fn label(&self) -> String {
        match self.ij {
            Some((i, j)) => format!("eq{}(i={},j={})", self.equation, i, j),
            None => format!("eq{}", self.equation),
        }
    }

    pub fn text(&self) -> &'static str {
        EQUATION_TEXT[self.equation - 1]
    }
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Residual", 3)?;
        st.serialize_field("label", &self.label())?;
        st.serialize_field("equation", self.text())?;
        st.serialize_field("residual", &format_rational(&self.value))?;
        st.end()
    }
}

fn family(k: usize, i: Sign, j: Sign, r: &VertexWeights, s: &VertexWeights, t: &VertexWeights) -> BigRational {
    let (a, b, c, d) = (VertexWeights::a, VertexWeights::b, VertexWeights::c, VertexWeights::d);
    match k {
        1 => {
            a(t, j) * a(s, j) * d(r, i) + d(t, i) * c(s, i) * a(r, -j)
                - (c(t, i) * d(s, i) * a(r, j) + b(t, -j) * b(s, -j) * d(r, i))
        }
        2 => {
            d(t, i) * b(s, j) * c(r, i) + a(t, j) * d(s, i) * b(r, -j)
                - (b(t, j) * d(s, i) * a(r, j) + c(t, -i) * b(s, -j) * d(r, i))
        }
        3 => {
            d(t, i) * b(s, j) * b(r, j) + a(t, j) * d(s, i) * c(r, -i)
                - (d(t, i) * a(s, j) * a(r, j) + a(t, -j) * c(s, -i) * d(r, i))
        }
        4 => {
            c(t, i) * a(s, j) * c(r, i) + b(t, j) * c(s, i) * b(r, -j)
                - (a(t, j) * c(s, i) * a(r, j) + d(t, -i) * a(s, -j) * d(r, i))
        }
        5 => {
            c(t, i) * a(s, j) * b(r, j) + b(t, j) * c(s, i) * c(r, -i)
                - (c(t, i) * b(s, j) * a(r, j) + b(t, -j) * d(s, -i) * d(r, i))
        }
        6 => {
            b(t, -j) * a(s, j) * c(r, i) + c(t, -i) * c(s, i) * b(r, -j)
                - (d(t, -i) * d(s, i) * b(r, j) + a(t, j) * b(s, -j) * c(r, i))
        }
        _ => unreachable!("families 1 to 6 carry (i, j)"),
    }
}

/// The 28 residuals: families 1 to 6 for each `(i, j)` in [`IJ_ORDER`],
/// then families 7 to 10.
pub fn residuals28(r: &VertexWeights, s: &VertexWeights, t: &VertexWeights) -> Vec<Residual> {
    let (p, m) = (Sign::Plus, Sign::Minus);
    let (c, d) = (VertexWeights::c, VertexWeights::d);
    let mut out = Vec::with_capacity(28);
    for k in 1..=6 {
        for (i, j) in IJ_ORDER {
            out.push(Residual { equation: k, ij: Some((i, j)), value: family(k, i, j, r, s, t) });
        }
    }
    let tail = [
        c(t, p) * c(s, m) * c(r, p) - c(t, m) * c(s, p) * c(r, m),
        d(t, p) * c(s, p) * d(r, m) - d(t, m) * c(s, m) * d(r, p),
        c(t, p) * d(s, p) * d(r, m) - c(t, m) * d(s, m) * d(r, p),
        d(t, p) * d(s, m) * c(r, p) - d(t, m) * d(s, p) * c(r, m),
    ];
    for (k, value) in tail.into_iter().enumerate() {
        out.push(Residual { equation: 7 + k, ij: None, value });
    }
    out
}
