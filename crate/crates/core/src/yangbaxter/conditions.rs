//! Invariants `F` and `G_i` and the necessary conditions for a solution `R`
//! with nonzero `c` and `d` weights.

use num_rational::BigRational;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::{format_rational, Field};
use crate::error::{Error, Result};

use super::weights::{Sign, VertexWeights};

/// `a_1 a_{-1} + b_1 b_{-1} - c_1 c_{-1} - d_1 d_{-1}`.
pub fn f_invariant(w: &VertexWeights) -> BigRational {
    &w.a1 * &w.a_neg1 + &w.b1 * &w.b_neg1 - &w.c1 * &w.c_neg1 - &w.d1 * &w.d_neg1
}

/// `c_{-i}(T)d_i(T)[b_{-1}(S)a_1(S) + a_{-1}(S)b_1(S)] - c_{-i}(S)d_i(S)[b_{-1}(T)a_1(T) + a_{-1}(T)b_1(T)]`.
pub fn g_invariant(i: Sign, s: &VertexWeights, t: &VertexWeights) -> BigRational {
    let bracket = |w: &VertexWeights| &w.b_neg1 * &w.a1 + &w.a_neg1 * &w.b1;
    t.c(-i) * t.d(i) * bracket(s) - s.c(-i) * s.d(i) * bracket(t)
}

/// `a_j(T)b_j(T)F(S) - a_{-j}(S)b_{-j}(S)F(T)`.
pub fn alpha(j: Sign, s: &VertexWeights, t: &VertexWeights) -> BigRational {
    t.a(j) * t.b(j) * f_invariant(s) - s.a(-j) * s.b(-j) * f_invariant(t)
}

/// `a_j(T)b_j(T)F(S) - a_j(S)b_j(S)F(T)`.
pub fn beta(j: Sign, s: &VertexWeights, t: &VertexWeights) -> BigRational {
    t.a(j) * t.b(j) * f_invariant(s) - s.a(j) * s.b(j) * f_invariant(t)
}

/// The 4x2 coefficient matrix of `(c_i(R), d_i(R))`:
/// rows `(k G, -alpha_1)`, `(k G, -alpha_{-1})`, `(beta_1, -l G)`, `(beta_{-1}, -l G)`
/// with `k = c_i(T)/c_{-i}(T)`, `l = d_{-i}(T)/d_i(T)`, `G = G_i(S,T)`.
pub fn coefficient_matrix(i: Sign, s: &VertexWeights, t: &VertexWeights) -> [[BigRational; 2]; 4] {
    let g = g_invariant(i, s, t);
    let k = t.c(i) / t.c(-i);
    let l = t.d(-i) / t.d(i);
    [
        [&k * &g, -alpha(Sign::Plus, s, t)],
        [&k * &g, -alpha(Sign::Minus, s, t)],
        [beta(Sign::Plus, s, t), -(&l * &g)],
        [beta(Sign::Minus, s, t), -(&l * &g)],
    ]
}

/// The six 2x2 minors of [`coefficient_matrix`], rows `(1,2), (1,3), (1,4), (2,3), (2,4), (3,4)`.
pub fn minors(i: Sign, s: &VertexWeights, t: &VertexWeights) -> Vec<((usize, usize), BigRational)> {
    let m = coefficient_matrix(i, s, t);
    let mut out = Vec::with_capacity(6);
    for p in 0..4 {
        for q in p + 1..4 {
            out.push(((p + 1, q + 1), &m[p][0] * &m[q][1] - &m[p][1] * &m[q][0]));
        }
    }
    out
}

/// Outcome of [`check_necessary_conditions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// `a_1(T)b_1(T)F(S) = a_{-1}(T)b_{-1}(T)F(S)`
    pub cond_i: bool,
    /// `a_1(S)b_1(S)F(T) = a_{-1}(S)b_{-1}(S)F(T)`
    pub cond_ii: bool,
    /// `c_i(T)d_{-i}(T)/(c_{-i}(T)d_i(T)) G_i^2 = [a_1(T)b_1(T)F(S) - a_1(S)b_1(S)F(T)]^2` at `i = 1`
    pub cond_iii_plus: bool,
    /// The same at `i = -1`
    pub cond_iii_minus: bool,
    /// `c_1(T)c_{-1}(S)/(c_{-1}(T)c_1(S)) = d_1(T)d_{-1}(S)/(d_{-1}(T)d_1(S))`
    pub cond_iv: bool,
    pub f_s: BigRational,
    pub f_t: BigRational,
    pub g_plus: BigRational,
    pub g_minus: BigRational,
    pub alpha_plus: BigRational,
    pub alpha_minus: BigRational,
    pub beta_plus: BigRational,
    pub beta_minus: BigRational,
    /// All six minors for `i = 1`.
    pub minors_plus: Vec<((usize, usize), BigRational)>,
    /// All six minors for `i = -1`.
    pub minors_minus: Vec<((usize, usize), BigRational)>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.cond_i && self.cond_ii && self.cond_iii_plus && self.cond_iii_minus && self.cond_iv
    }

    pub fn conditions(&self) -> [bool; 5] {
        [self.cond_i, self.cond_ii, self.cond_iii_plus, self.cond_iii_minus, self.cond_iv]
    }

    /// Every 2x2 minor vanishes for both signs.
    pub fn minors_vanish(&self) -> bool {
        self.minors_plus.iter().chain(&self.minors_minus).all(|(_, v)| Field::is_zero(v))
    }
}

impl Serialize for ConditionReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let q = |v: &BigRational| format_rational(v);
        let minors = |m: &[((usize, usize), BigRational)]| -> serde_json::Value {
            m.iter()
                .map(|((p, r), v)| (format!("{p}{r}"), serde_json::Value::String(q(v))))
                .collect::<serde_json::Map<_, _>>()
                .into()
        };
        let mut st = s.serialize_struct("ConditionReport", 8)?;
        st.serialize_field(
            "conditions",
            &serde_json::json!({
                "i": self.cond_i,
                "ii": self.cond_ii,
                "iii(i=1)": self.cond_iii_plus,
                "iii(i=-1)": self.cond_iii_minus,
                "iv": self.cond_iv,
            }),
        )?;
        st.serialize_field("all_hold", &self.all_hold())?;
        st.serialize_field("F", &serde_json::json!({"S": q(&self.f_s), "T": q(&self.f_t)}))?;
        st.serialize_field("G", &serde_json::json!({"1": q(&self.g_plus), "-1": q(&self.g_minus)}))?;
        st.serialize_field("alpha", &serde_json::json!({"1": q(&self.alpha_plus), "-1": q(&self.alpha_minus)}))?;
        st.serialize_field("beta", &serde_json::json!({"1": q(&self.beta_plus), "-1": q(&self.beta_minus)}))?;
        st.serialize_field(
            "minors",
            &serde_json::json!({
                "1": minors(&self.minors_plus),
                "-1": minors(&self.minors_minus),
            }),
        )?;
        st.serialize_field("minors_vanish", &self.minors_vanish())?;
        st.end()
    }
}

/// Evaluates the four necessary conditions on `(S, T)` for some `R` with
/// nonzero `c_{±1}(R), d_{±1}(R)` to satisfy `[[R, S, T]] = 0`.
///
/// All sixteen weights of `S` and `T` must be nonzero.
pub fn check_necessary_conditions(s: &VertexWeights, t: &VertexWeights) -> Result<ConditionReport> {
    for (name, w) in [("S", s), ("T", t)] {
        if !w.all_nonzero() {
            return Err(Error::ZeroWeight(name.to_string()));
        }
    }
    let (p, m) = (Sign::Plus, Sign::Minus);
    let (f_s, f_t) = (f_invariant(s), f_invariant(t));
    let cond_iii = |i: Sign| {
        let g = g_invariant(i, s, t);
        let lhs = t.c(i) * t.d(-i) / (t.c(-i) * t.d(i)) * &g * &g;
        let diff = t.a(p) * t.b(p) * &f_s - s.a(p) * s.b(p) * &f_t;
        lhs == &diff * &diff
    };
    Ok(ConditionReport {
        cond_i: t.a(p) * t.b(p) * &f_s == t.a(m) * t.b(m) * &f_s,
        cond_ii: s.a(p) * s.b(p) * &f_t == s.a(m) * s.b(m) * &f_t,
        cond_iii_plus: cond_iii(p),
        cond_iii_minus: cond_iii(m),
        cond_iv: t.c(p) * s.c(m) / (t.c(m) * s.c(p)) == t.d(p) * s.d(m) / (t.d(m) * s.d(p)),
        g_plus: g_invariant(p, s, t),
        g_minus: g_invariant(m, s, t),
        alpha_plus: alpha(p, s, t),
        alpha_minus: alpha(m, s, t),
        beta_plus: beta(p, s, t),
        beta_minus: beta(m, s, t),
        minors_plus: minors(p, s, t),
        minors_minus: minors(m, s, t),
        f_s,
        f_t,
    })
}
