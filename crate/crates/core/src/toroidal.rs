//! Doubly periodic fields and 1-forms over F3 on the discrete torus.
//!
//! A periodic object is stored on its fundamental domain `[m] x [n]`; lookups
//! at arbitrary integer indices reduce into that domain with [`index_reduce`].
//! The first cohomology of the torus is spanned by `dx` and `dy` whenever
//! neither side is divisible by 3, which is what [`decompose`] computes.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Add;

use serde::Serialize;

use crate::algebra::{Field, FieldTag, Gf3};
use crate::error::{Error, Result};
use crate::forms::is_admissible_six;
use crate::grid::{Grid2, GridShape, LatticeState};
use crate::guard::SizeGuard;

/// Representative of `i` modulo `period` in `1..=period`.
pub fn index_reduce(i: i64, period: usize) -> usize {
    assert!(period >= 1, "period must be positive");
    ((i - 1).rem_euclid(period as i64) + 1) as usize
}

/// Fails unless both sides of the torus are prime to 3.
pub fn require_prime_to_three(shape: GridShape) -> Result<()> {
    if shape.m().is_multiple_of(3) || shape.n().is_multiple_of(3) {
        return Err(Error::DivisibleByThree { m: shape.m(), n: shape.n() });
    }
    Ok(())
}

/// A doubly periodic function `Z x Z -> F3` with periods `m` and `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicField {
    shape: GridShape,
    values: Grid2<Gf3>,
}

impl PeriodicField {
    pub fn new(shape: GridShape, values: Grid2<Gf3>) -> Result<Self> {
        if values.width() != shape.m() || values.height() != shape.n() {
            return Err(Error::DimensionMismatch(format!("fundamental domain must be {}x{}", shape.m(), shape.n())));
        }
        Ok(PeriodicField { shape, values })
    }

    pub fn from_fn(shape: GridShape, f: impl FnMut(usize, usize) -> Gf3) -> Self {
        PeriodicField { shape, values: Grid2::from_fn(shape.m(), shape.n(), f) }
    }

    pub fn zero(shape: GridShape) -> Self {
        Self::from_fn(shape, |_, _| Gf3::ZERO)
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    /// Value at any integer point.
    pub fn get(&self, i: i64, j: i64) -> Gf3 {
        *self.values.get(index_reduce(i, self.shape.m()), index_reduce(j, self.shape.n()))
    }

    pub fn domain(&self) -> &Grid2<Gf3> {
        &self.values
    }

    pub fn to_nested(&self) -> Vec<Vec<u8>> {
        self.values.map(|v| v.value()).to_nested()
    }
}

/// A toroidal 1-form `f dx + g dy` with doubly periodic `f` and `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToroidalOneForm {
    shape: GridShape,
    fx: Grid2<Gf3>,
    gy: Grid2<Gf3>,
}

impl ToroidalOneForm {
    pub fn new(shape: GridShape, fx: Grid2<Gf3>, gy: Grid2<Gf3>) -> Result<Self> {
        for (name, c) in [("f", &fx), ("g", &gy)] {
            if c.width() != shape.m() || c.height() != shape.n() {
                return Err(Error::DimensionMismatch(format!(
                    "{name} must be given on the {}x{} fundamental domain",
                    shape.m(),
                    shape.n()
                )));
            }
        }
        Ok(ToroidalOneForm { shape, fx, gy })
    }

    pub fn from_fns(shape: GridShape, f: impl FnMut(usize, usize) -> Gf3, g: impl FnMut(usize, usize) -> Gf3) -> Self {
        ToroidalOneForm {
            shape,
            fx: Grid2::from_fn(shape.m(), shape.n(), f),
            gy: Grid2::from_fn(shape.m(), shape.n(), g),
        }
    }

    /// The constant form `r dx + s dy`.
    pub fn constant(shape: GridShape, r: Gf3, s: Gf3) -> Self {
        Self::from_fns(shape, |_, _| r, |_, _| s)
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn f(&self, i: i64, j: i64) -> Gf3 {
        *self.fx.get(index_reduce(i, self.shape.m()), index_reduce(j, self.shape.n()))
    }

    pub fn g(&self, i: i64, j: i64) -> Gf3 {
        *self.gy.get(index_reduce(i, self.shape.m()), index_reduce(j, self.shape.n()))
    }

    pub fn is_admissible(&self) -> bool {
        self.fx.values().iter().chain(self.gy.values()).all(|&v| v != Gf3::new(2))
    }
}

impl Add for &ToroidalOneForm {
    type Output = ToroidalOneForm;
    fn add(self, rhs: &ToroidalOneForm) -> ToroidalOneForm {
        assert_eq!(self.shape, rhs.shape, "forms on different tori");
        ToroidalOneForm::from_fns(
            self.shape,
            |i, j| self.f(i as i64, j as i64) + rhs.f(i as i64, j as i64),
            |i, j| self.g(i as i64, j as i64) + rhs.g(i as i64, j as i64),
        )
    }
}

/// `dh` with periodic differences `h[i+1][j] - h[i][j]` and `h[i][j+1] - h[i][j]`.
pub fn toroidal_derivatives(h: &PeriodicField) -> ToroidalOneForm {
    ToroidalOneForm::from_fns(
        h.shape,
        |i, j| h.get(i as i64 + 1, j as i64) - h.get(i as i64, j as i64),
        |i, j| h.get(i as i64, j as i64 + 1) - h.get(i as i64, j as i64),
    )
}

/// `D_y f = D_x g`, checked on one fundamental domain.
pub fn is_closed_toroidal(w: &ToroidalOneForm) -> bool {
    let s = w.shape;
    (1..=s.m() as i64).all(|i| (1..=s.n() as i64).all(|j| w.f(i, j + 1) - w.f(i, j) == w.g(i + 1, j) - w.g(i, j)))
}

/// Returns the potential `h` with `h[1][1] = 0` and `dh = w`, if one exists.
///
/// Integrates along the bottom row and then up each column, and accepts the
/// result only if its periodic derivative reproduces `w` everywhere,
/// including across the seams. Works for every shape.
pub fn exact_potential(w: &ToroidalOneForm) -> Option<PeriodicField> {
    let s = w.shape;
    let mut values = Grid2::filled(s.m(), s.n(), Gf3::ZERO);
    let mut base = Gf3::ZERO;
    for i in 1..=s.m() {
        if i > 1 {
            base = base + w.f(i as i64 - 1, 1);
        }
        let mut acc = base;
        values.set(i, 1, acc);
        for j in 2..=s.n() {
            acc = acc + w.g(i as i64, j as i64 - 1);
            values.set(i, j, acc);
        }
    }
    let h = PeriodicField { shape: s, values };
    (toroidal_derivatives(&h) == *w).then_some(h)
}

/// The unique splitting `w = r dx + s dy + dh` with `h[1][1] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyDecomposition {
    pub r: Gf3,
    pub s: Gf3,
    pub h: PeriodicField,
}

impl CohomologyDecomposition {
    /// `r dx + s dy + dh`.
    pub fn reconstruct(&self) -> ToroidalOneForm {
        &ToroidalOneForm::constant(self.h.shape, self.r, self.s) + &toroidal_derivatives(&self.h)
    }
}

/// Splits a closed toroidal form into its cohomology class and an exact part.
///
/// `r = (1/m) sum_i f[i][1]`, `s = (1/n) sum_j g[1][j]`, and
/// `h[i][j] = sum_{a<i} (f[a][1] - r) + sum_{b<j} (g[i][b] - s)` on the
/// fundamental domain.
pub fn decompose(w: &ToroidalOneForm) -> Result<CohomologyDecomposition> {
    let shape = w.shape;
    require_prime_to_three(shape)?;
    if !is_closed_toroidal(w) {
        return Err(Error::Precondition("toroidal form is not closed".into()));
    }
    let (m, n) = (shape.m(), shape.n());
    let inv_m = Gf3::new(m as i64).inv().expect("m prime to 3");
    let inv_n = Gf3::new(n as i64).inv().expect("n prime to 3");
    let r = inv_m * (1..=m as i64).map(|i| w.f(i, 1)).sum::<Gf3>();
    let s = inv_n * (1..=n as i64).map(|j| w.g(1, j)).sum::<Gf3>();

    let mut values = Grid2::filled(m, n, Gf3::ZERO);
    let mut base = Gf3::ZERO;
    for i in 1..=m {
        if i > 1 {
            base = base + (w.f(i as i64 - 1, 1) - r);
        }
        let mut acc = base;
        values.set(i, 1, acc);
        for j in 2..=n {
            acc = acc + (w.g(i as i64, j as i64 - 1) - s);
            values.set(i, j, acc);
        }
    }
    Ok(CohomologyDecomposition { r, s, h: PeriodicField { shape, values } })
}

/// Values taken by a periodic component over one fundamental domain.
fn image(g: &Grid2<Gf3>) -> BTreeSet<Gf3> {
    g.values().iter().copied().collect()
}

/// Neither `D_x h` nor `D_y h` is surjective, and `h[1][1] = 0`.
pub fn is_sparse(h: &PeriodicField) -> bool {
    if h.get(1, 1) != Gf3::ZERO {
        return false;
    }
    let dh = toroidal_derivatives(h);
    image(&dh.fx).len() < 3 && image(&dh.gy).len() < 3
}

/// `g[1][j] = g[m+1][j]` and `f[i][1] = f[i][n+1]`.
pub fn has_toroidal_boundary(s: &LatticeState) -> bool {
    let (m, n) = (s.shape().m(), s.shape().n());
    (1..=m).all(|i| s.f(i, 1) == s.f(i, n + 1)) && (1..=n).all(|j| s.g(1, j) == s.g(m + 1, j))
}

/// Six-vertex admissible with toroidal boundary labels.
pub fn is_admissible_toroidal(s: &LatticeState) -> Result<bool> {
    Ok(is_admissible_six(s)? && has_toroidal_boundary(s))
}

/// Periodic extension of a state with toroidal boundary labels.
pub fn toroidal_form_of_state(s: &LatticeState) -> Result<ToroidalOneForm> {
    if !has_toroidal_boundary(s) {
        return Err(Error::Precondition("state does not have toroidal boundary labels".into()));
    }
    Ok(ToroidalOneForm::from_fns(s.shape(), |i, j| Gf3::new(s.f(i, j) as i64), |i, j| Gf3::new(s.g(i, j) as i64)))
}

/// Restriction of an admissible toroidal form to the rectangle, tagged F3.
pub fn state_of_toroidal_form(w: &ToroidalOneForm) -> Result<LatticeState> {
    if !w.is_admissible() {
        return Err(Error::Precondition("form has a component equal to 2".into()));
    }
    let s = w.shape;
    let f = Grid2::from_fn(s.m(), s.n() + 1, |i, j| w.f(i as i64, j as i64).value());
    let g = Grid2::from_fn(s.m() + 1, s.n(), |i, j| w.g(i as i64, j as i64).value());
    LatticeState::new(s, FieldTag::F3, f, g)
}

/// The normalized potential of an admissible toroidal state.
pub fn state_to_sparse(s: &LatticeState) -> Result<PeriodicField> {
    if !has_toroidal_boundary(s) {
        return Err(Error::Precondition("state does not have toroidal boundary labels".into()));
    }
    if !is_admissible_six(s)? {
        return Err(Error::Precondition("state is not six-vertex admissible".into()));
    }
    Ok(decompose(&toroidal_form_of_state(s)?)?.h)
}

/// All admissible six-vertex states with toroidal boundary labels, in
/// lexicographic edge order. The `2mn` free labels are enumerated directly.
pub fn enumerate_toroidal(shape: GridShape, guard: SizeGuard) -> Result<Vec<LatticeState>> {
    let (m, n) = (shape.m(), shape.n());
    let free = 2 * m * n;
    guard.check(free as u32)?;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free) {
        let bit = |k: usize| ((mask >> (free - 1 - k)) & 1) as u8;
        let w = ToroidalOneForm::from_fns(
            shape,
            |i, j| Gf3::new(bit((i - 1) * n + (j - 1)) as i64),
            |i, j| Gf3::new(bit(m * n + (i - 1) * n + (j - 1)) as i64),
        );
        if is_closed_toroidal(&w) {
            out.push(state_of_toroidal_form(&w)?);
        }
    }
    Ok(out)
}

/// Sparse functions on the torus, enumerated over `h` with `h[1][1] = 0`.
pub fn enumerate_sparse(shape: GridShape, guard: SizeGuard) -> Result<Vec<PeriodicField>> {
    let cells = shape.m() * shape.n();
    // 3^(cells - 1) candidates
    guard.check(((cells - 1) as f64 * 3f64.log2()).ceil() as u32)?;
    let mut out = Vec::new();
    let mut digits = vec![0u8; cells - 1];
    loop {
        let h = PeriodicField::from_fn(shape, |i, j| {
            let k = (i - 1) * shape.n() + (j - 1);
            if k == 0 {
                Gf3::ZERO
            } else {
                Gf3::new(digits[k - 1] as i64)
            }
        });
        if is_sparse(&h) {
            out.push(h);
        }
        // little-endian odometer over the trailing digits
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                out.sort();
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < 3 {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Cohomology classes `r` with `2 - r` outside the image of a derivative.
fn class_choices(component: &Grid2<Gf3>) -> Vec<Gf3> {
    let img = image(component);
    Gf3::elements().filter(|r| !img.contains(&(Gf3::new(2) - *r))).collect()
}

/// All admissible toroidal states sharing one sparse potential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub h: PeriodicField,
    /// Values of `r` with `2 - r` outside `Im(D_x h)`.
    pub r_choices: Vec<Gf3>,
    /// Values of `s` with `2 - s` outside `Im(D_y h)`.
    pub s_choices: Vec<Gf3>,
    pub states: Vec<LatticeState>,
}

impl Fiber {
    pub fn fiber_size(&self) -> usize {
        self.states.len()
    }

    /// `|r_choices| * |s_choices|`.
    pub fn predicted_size(&self) -> usize {
        self.r_choices.len() * self.s_choices.len()
    }
}

#[derive(Serialize)]
struct FiberJson {
    h: Vec<Vec<u8>>,
    r_choices: Vec<u8>,
    s_choices: Vec<u8>,
    fiber_size: usize,
}

impl Serialize for Fiber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FiberJson {
            h: self.h.to_nested(),
            r_choices: self.r_choices.iter().map(|v| v.value()).collect(),
            s_choices: self.s_choices.iter().map(|v| v.value()).collect(),
            fiber_size: self.fiber_size(),
        }
        .serialize(s)
    }
}

/// Grouping of all admissible toroidal states by their sparse potential.
#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    pub shape: GridShape,
    pub total_states: usize,
    /// Number of sparse functions found by direct enumeration of potentials.
    pub sparse_functions: usize,
    /// Every sparse function has a nonempty fiber and every key is sparse.
    pub keys_are_sparse_functions: bool,
    /// Fiber sizes sum to `total_states`.
    pub partitions_states: bool,
    /// Every fiber size equals `|r_choices| * |s_choices|`.
    pub sizes_match_class_choices: bool,
    /// fiber size -> number of fibers of that size
    pub size_histogram: BTreeMap<usize, usize>,
    pub fibers: Vec<Fiber>,
}

/// Enumerates admissible toroidal states and groups them by [`state_to_sparse`].
pub fn sparse_fibers(shape: GridShape, guard: SizeGuard) -> Result<FiberReport> {
    require_prime_to_three(shape)?;
    let states = enumerate_toroidal(shape, guard)?;
    let mut groups: BTreeMap<PeriodicField, Vec<LatticeState>> = BTreeMap::new();
    for st in &states {
        groups.entry(state_to_sparse(st)?).or_default().push(st.clone());
    }
    let fibers: Vec<Fiber> = groups
        .into_iter()
        .map(|(h, states)| {
            let dh = toroidal_derivatives(&h);
            Fiber { r_choices: class_choices(&dh.fx), s_choices: class_choices(&dh.gy), h, states }
        })
        .collect();

    let sparse = enumerate_sparse(shape, guard)?;
    let keys: Vec<&PeriodicField> = fibers.iter().map(|f| &f.h).collect();
    let keys_are_sparse_functions = keys.len() == sparse.len() && keys.iter().zip(&sparse).all(|(a, b)| *a == b);

    let mut size_histogram = BTreeMap::new();
    for f in &fibers {
        *size_histogram.entry(f.fiber_size()).or_insert(0) += 1;
    }
    Ok(FiberReport {
        shape,
        total_states: states.len(),
        sparse_functions: sparse.len(),
        keys_are_sparse_functions,
        partitions_states: fibers.iter().map(Fiber::fiber_size).sum::<usize>() == states.len(),
        sizes_match_class_choices: fibers.iter().all(|f| f.fiber_size() == f.predicted_size()),
        size_histogram,
        fibers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn shape(m: usize, n: usize) -> GridShape {
        GridShape::new(m, n).unwrap()
    }

    #[test]
    fn index_reduce_examples() {
        assert_eq!(index_reduce(5, 5), 5);
        assert_eq!(index_reduce(6, 5), 1);
        assert_eq!(index_reduce(0, 5), 5);
        assert_eq!(index_reduce(-4, 5), 1);
        assert_eq!(index_reduce(7, 1), 1);
    }

    #[test]
    fn derivatives_of_point_mass() {
        // h = 1 at (1,1) on a 2x2 domain: D_x h(1,1) = h(2,1) - h(1,1) = -1,
        // D_x h(2,1) = h(3,1) - h(2,1) = h(1,1) = 1, zero on row 2.
        let s = shape(2, 2);
        let h = PeriodicField::from_fn(s, |i, j| if (i, j) == (1, 1) { Gf3::ONE } else { Gf3::ZERO });
        let dh = toroidal_derivatives(&h);
        assert_eq!(dh.f(1, 1), Gf3::new(-1));
        assert_eq!(dh.f(2, 1), Gf3::ONE);
        assert_eq!(dh.f(1, 2), Gf3::ZERO);
        assert_eq!(dh.f(2, 2), Gf3::ZERO);
        assert_eq!(dh.f(3, 1), dh.f(1, 1));
    }

    #[test]
    fn derivative_row_sums_vanish() {
        let s = shape(4, 2);
        let h = PeriodicField::from_fn(s, |i, j| Gf3::new((i * i + j) as i64));
        let dh = toroidal_derivatives(&h);
        for j in 1..=2 {
            assert_eq!((1..=4).map(|i| dh.f(i, j)).sum::<Gf3>(), Gf3::ZERO);
        }
    }

    #[test]
    fn closed_examples() {
        let s = shape(2, 2);
        assert!(is_closed_toroidal(&ToroidalOneForm::constant(s, Gf3::ZERO, Gf3::ZERO)));
        assert!(is_closed_toroidal(&ToroidalOneForm::constant(s, Gf3::ONE, Gf3::ZERO)));
        let mut w = toroidal_derivatives(&PeriodicField::from_fn(s, |i, j| Gf3::new((i + 2 * j) as i64)));
        w.fx.set(1, 1, *w.fx.get(1, 1) + Gf3::ONE);
        assert!(!is_closed_toroidal(&w));
        assert!(decompose(&w).is_err());
    }

    #[test]
    fn decompose_examples() {
        let s = shape(2, 2);
        let zero = decompose(&ToroidalOneForm::constant(s, Gf3::ZERO, Gf3::ZERO)).unwrap();
        assert_eq!((zero.r, zero.s, zero.h.clone()), (Gf3::ZERO, Gf3::ZERO, PeriodicField::zero(s)));
        let dx = decompose(&ToroidalOneForm::constant(s, Gf3::ONE, Gf3::ZERO)).unwrap();
        assert_eq!((dx.r, dx.s, dx.h.clone()), (Gf3::ONE, Gf3::ZERO, PeriodicField::zero(s)));
    }

    #[test]
    fn decompose_rejects_multiples_of_three() {
        let w = ToroidalOneForm::constant(shape(3, 2), Gf3::ZERO, Gf3::ZERO);
        assert_eq!(decompose(&w), Err(Error::DivisibleByThree { m: 3, n: 2 }));
    }

    #[test]
    fn sparse_examples() {
        let s = shape(2, 2);
        assert!(is_sparse(&PeriodicField::zero(s)));
        // x reduced: D_x takes the value 1 and the wrap value 1 - m, never all three.
        for sh in [shape(2, 2), shape(4, 2), shape(5, 4)] {
            let x = PeriodicField::from_fn(sh, |i, _| Gf3::new(i as i64 - 1));
            assert!(is_sparse(&x), "{sh:?}");
        }
        // h = (0, 1, 1, 0) along x: D_x h = (1, 0, 2, 0) is onto.
        let bump = PeriodicField::from_fn(shape(4, 2), |i, _| Gf3::new([0, 1, 1, 0][i - 1]));
        assert!(!is_sparse(&bump));
        let one = PeriodicField::from_fn(s, |_, _| Gf3::ONE);
        assert!(!is_sparse(&one));
    }

    #[test]
    fn constant_states() {
        let s = shape(2, 2);
        let zero = LatticeState::zero(s, FieldTag::F3).unwrap();
        assert_eq!(state_to_sparse(&zero).unwrap(), PeriodicField::zero(s));
        let ones = LatticeState::from_edges(s, FieldTag::F3, &vec![1; s.edge_count()]).unwrap();
        assert!(is_admissible_toroidal(&ones).unwrap());
        let d = decompose(&toroidal_form_of_state(&ones).unwrap()).unwrap();
        assert_eq!((d.r, d.s), (Gf3::ONE, Gf3::ONE));
        assert_eq!(d.h, PeriodicField::zero(s));
    }

    #[test]
    fn torus_fixture_is_toroidal_but_not_decomposable() {
        let fig = fixtures::torus_5x3();
        assert!(is_admissible_toroidal(&fig).unwrap());
        let w = toroidal_form_of_state(&fig).unwrap();
        assert!(is_closed_toroidal(&w));
        // n = 3 leaves no inverse for the dy class, and sum_j g[1][j] = 1
        // cannot be the column sum of any r dx + s dy + dh.
        let col: Gf3 = (1..=3).map(|j| w.g(1, j)).sum();
        assert_eq!(col, Gf3::ONE);
        assert_eq!(decompose(&w), Err(Error::DivisibleByThree { m: 5, n: 3 }));
        assert!(state_to_sparse(&fig).is_err());
    }

    #[test]
    fn non_toroidal_state_rejected() {
        let s = shape(2, 2);
        let mut st = LatticeState::zero(s, FieldTag::F3).unwrap();
        st.set_f(1, 1, 1);
        assert!(!has_toroidal_boundary(&st));
        assert!(state_to_sparse(&st).is_err());
    }

    #[test]
    fn fibers_at_2x2() {
        let report = sparse_fibers(shape(2, 2), SizeGuard::default()).unwrap();
        assert!(report.partitions_states);
        assert!(report.keys_are_sparse_functions);
        assert!(report.sizes_match_class_choices);
        let zero = report.fibers.iter().find(|f| f.h == PeriodicField::zero(shape(2, 2))).unwrap();
        assert_eq!(zero.fiber_size(), 4);
        assert_eq!(zero.r_choices, vec![Gf3::ZERO, Gf3::ONE]);
        let mut classes: Vec<(u8, u8)> = zero
            .states
            .iter()
            .map(|st| {
                let d = decompose(&toroidal_form_of_state(st).unwrap()).unwrap();
                (d.r.value(), d.s.value())
            })
            .collect();
        classes.sort();
        assert_eq!(classes, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }
}
