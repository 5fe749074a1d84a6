//! Discrete differential forms over F3 on a rectangle.
//!
//! A scalar field `h` lives on the `(m+1) x (n+1)` grid points. Its exterior
//! derivative is the 1-form `dh = (D_x h) dx + (D_y h) dy` whose components sit
//! on the same index sets as the vertical and horizontal edge labels of a
//! lattice state. Six-vertex admissibility is exactly closedness of the
//! corresponding form, and a closed form with no component equal to 2
//! integrates to a proper 3-coloring of the grid points.

use std::ops::{Add, Sub};

use serde::Serialize;

use crate::algebra::{FieldTag, Gf3};
use crate::error::{Error, Result};
use crate::grid::{Grid2, GridShape, LatticeState};
use crate::guard::SizeGuard;

/// A function `[m+1] x [n+1] -> F3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarField {
    shape: GridShape,
    h: Grid2<Gf3>,
}

impl ScalarField {
    pub fn new(shape: GridShape, h: Grid2<Gf3>) -> Result<Self> {
        if h.width() != shape.m() + 1 || h.height() != shape.n() + 1 {
            return Err(Error::DimensionMismatch(format!("scalar field must be {}x{}", shape.m() + 1, shape.n() + 1)));
        }
        Ok(ScalarField { shape, h })
    }

    pub fn from_fn(shape: GridShape, f: impl FnMut(usize, usize) -> Gf3) -> Self {
        ScalarField { shape, h: Grid2::from_fn(shape.m() + 1, shape.n() + 1, f) }
    }

    pub fn constant(shape: GridShape, c: Gf3) -> Self {
        Self::from_fn(shape, |_, _| c)
    }

    /// The coordinate function `x(i, j) = i`.
    pub fn coordinate_x(shape: GridShape) -> Self {
        Self::from_fn(shape, |i, _| Gf3::new(i as i64))
    }

    /// The coordinate function `y(i, j) = j`.
    pub fn coordinate_y(shape: GridShape) -> Self {
        Self::from_fn(shape, |_, j| Gf3::new(j as i64))
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn get(&self, i: usize, j: usize) -> Gf3 {
        *self.h.get(i, j)
    }

    pub fn grid(&self) -> &Grid2<Gf3> {
        &self.h
    }
}

/// A 1-form `f dx + g dy` with `f` on `[m] x [n+1]` and `g` on `[m+1] x [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneForm {
    shape: GridShape,
    fx: Grid2<Gf3>,
    gy: Grid2<Gf3>,
}

impl OneForm {
    pub fn new(shape: GridShape, fx: Grid2<Gf3>, gy: Grid2<Gf3>) -> Result<Self> {
        let (m, n) = (shape.m(), shape.n());
        if fx.width() != m || fx.height() != n + 1 || gy.width() != m + 1 || gy.height() != n {
            return Err(Error::DimensionMismatch(format!(
                "1-form components must be {}x{} and {}x{}",
                m,
                n + 1,
                m + 1,
                n
            )));
        }
        Ok(OneForm { shape, fx, gy })
    }

    pub fn from_fns(shape: GridShape, f: impl FnMut(usize, usize) -> Gf3, g: impl FnMut(usize, usize) -> Gf3) -> Self {
        let (m, n) = (shape.m(), shape.n());
        OneForm { shape, fx: Grid2::from_fn(m, n + 1, f), gy: Grid2::from_fn(m + 1, n, g) }
    }

    pub fn zero(shape: GridShape) -> Self {
        Self::from_fns(shape, |_, _| Gf3::ZERO, |_, _| Gf3::ZERO)
    }

    /// `dx`: `f = 1`, `g = 0`.
    pub fn dx(shape: GridShape) -> Self {
        Self::from_fns(shape, |_, _| Gf3::ONE, |_, _| Gf3::ZERO)
    }

    /// `dy`: `f = 0`, `g = 1`.
    pub fn dy(shape: GridShape) -> Self {
        Self::from_fns(shape, |_, _| Gf3::ZERO, |_, _| Gf3::ONE)
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn f(&self, i: usize, j: usize) -> Gf3 {
        *self.fx.get(i, j)
    }

    pub fn g(&self, i: usize, j: usize) -> Gf3 {
        *self.gy.get(i, j)
    }

    pub fn fx(&self) -> &Grid2<Gf3> {
        &self.fx
    }

    pub fn gy(&self) -> &Grid2<Gf3> {
        &self.gy
    }

    pub fn set_f(&mut self, i: usize, j: usize, v: Gf3) {
        self.fx.set(i, j, v);
    }

    pub fn set_g(&mut self, i: usize, j: usize, v: Gf3) {
        self.gy.set(i, j, v);
    }

    fn zip(&self, rhs: &OneForm, op: impl Fn(Gf3, Gf3) -> Gf3) -> OneForm {
        assert_eq!(self.shape, rhs.shape, "1-forms on different shapes");
        OneForm::from_fns(self.shape, |i, j| op(self.f(i, j), rhs.f(i, j)), |i, j| op(self.g(i, j), rhs.g(i, j)))
    }
}

impl Add for &OneForm {
    type Output = OneForm;
    fn add(self, rhs: &OneForm) -> OneForm {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &OneForm {
    type Output = OneForm;
    fn sub(self, rhs: &OneForm) -> OneForm {
        self.zip(rhs, |a, b| a - b)
    }
}

/// An assignment of colors `{0, 1, 2}` to the points of a `width x height` grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    cells: Grid2<Gf3>,
}

impl Coloring {
    pub fn new(cells: Grid2<Gf3>) -> Self {
        Coloring { cells }
    }

    pub fn width(&self) -> usize {
        self.cells.width()
    }

    pub fn height(&self) -> usize {
        self.cells.height()
    }

    pub fn get(&self, i: usize, j: usize) -> Gf3 {
        *self.cells.get(i, j)
    }

    pub fn cells(&self) -> &Grid2<Gf3> {
        &self.cells
    }

    /// No two horizontally or vertically adjacent cells share a color.
    pub fn is_proper(&self) -> bool {
        let (w, h) = (self.width(), self.height());
        (1..=w).all(|i| {
            (1..=h).all(|j| {
                (i == w || self.get(i, j) != self.get(i + 1, j)) && (j == h || self.get(i, j) != self.get(i, j + 1))
            })
        })
    }

    /// Nested rows indexed `[i-1][j-1]`.
    pub fn to_nested(&self) -> Vec<Vec<u8>> {
        self.cells.map(|c| c.value()).to_nested()
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_nested().serialize(s)
    }
}

/// `(D_x h)[i][j] = h[i+1][j] - h[i][j]` on `[m] x [n+1]`.
pub fn partial_x(h: &ScalarField) -> Grid2<Gf3> {
    let s = h.shape;
    Grid2::from_fn(s.m(), s.n() + 1, |i, j| h.get(i + 1, j) - h.get(i, j))
}

/// `(D_y h)[i][j] = h[i][j+1] - h[i][j]` on `[m+1] x [n]`.
pub fn partial_y(h: &ScalarField) -> Grid2<Gf3> {
    let s = h.shape;
    Grid2::from_fn(s.m() + 1, s.n(), |i, j| h.get(i, j + 1) - h.get(i, j))
}

pub fn exterior_derivative(h: &ScalarField) -> OneForm {
    OneForm { shape: h.shape, fx: partial_x(h), gy: partial_y(h) }
}

/// `D_y f = D_x g` at every interior vertex.
pub fn is_closed(w: &OneForm) -> bool {
    w.shape.vertices().all(|(i, j)| w.f(i, j + 1) - w.f(i, j) == w.g(i + 1, j) - w.g(i, j))
}

/// Integrates a closed form: `h[i][j] = sum_{a<i} f[a][1] + sum_{b<j} g[i][b]`.
///
/// The result satisfies `dh = w` and `h[1][1] = 0`.
pub fn antiderivative(w: &OneForm) -> Result<ScalarField> {
    if !is_closed(w) {
        return Err(Error::Precondition("antiderivative of a form that is not closed".into()));
    }
    let s = w.shape;
    let mut h = Grid2::filled(s.m() + 1, s.n() + 1, Gf3::ZERO);
    let mut base = Gf3::ZERO;
    for i in 1..=s.m() + 1 {
        if i > 1 {
            base = base + w.f(i - 1, 1);
        }
        let mut acc = base;
        h.set(i, 1, acc);
        for j in 2..=s.n() + 1 {
            acc = acc + w.g(i, j - 1);
            h.set(i, j, acc);
        }
    }
    Ok(ScalarField { shape: s, h })
}

/// No component equals 2.
pub fn is_admissible_form(w: &OneForm) -> bool {
    w.fx.values().iter().chain(w.gy.values()).all(|&v| v != Gf3::new(2))
}

fn require_binary(s: &LatticeState) -> Result<()> {
    if s.field() != FieldTag::F3 && s.field() != FieldTag::F2 {
        return Err(Error::Precondition("six-vertex states are labelled by 0/1".into()));
    }
    if !s.is_binary() {
        return Err(Error::Precondition("label 2 present; not a six-vertex state".into()));
    }
    Ok(())
}

fn six_vertex_ok(left: u8, top: u8, right: u8, bottom: u8) -> bool {
    let g = |v: u8| Gf3::new(v as i64);
    g(right) - g(left) == g(top) - g(bottom)
}

/// `g[i+1][j] - g[i][j] = f[i][j+1] - f[i][j] (mod 3)` at every vertex.
pub fn is_admissible_six(s: &LatticeState) -> Result<bool> {
    require_binary(s)?;
    Ok(s.shape().vertices().all(|(i, j)| {
        let e = s.edges_at_vertex(i, j).expect("vertex in range");
        six_vertex_ok(e.left, e.top, e.right, e.bottom)
    }))
}

/// Reads an admissible six-vertex state as the closed admissible form `f dx + g dy`.
pub fn state_to_form(s: &LatticeState) -> Result<OneForm> {
    if !is_admissible_six(s)? {
        return Err(Error::Precondition("state is not six-vertex admissible".into()));
    }
    Ok(OneForm::from_fns(s.shape(), |i, j| Gf3::new(s.f(i, j) as i64), |i, j| Gf3::new(s.g(i, j) as i64)))
}

/// Inverse of [`state_to_form`] on closed admissible forms. The state is tagged F3.
pub fn form_to_state(w: &OneForm) -> Result<LatticeState> {
    if !is_closed(w) {
        return Err(Error::Precondition("form is not closed".into()));
    }
    if !is_admissible_form(w) {
        return Err(Error::Precondition("form has a component equal to 2".into()));
    }
    LatticeState::new(w.shape, FieldTag::F3, w.fx.map(|v| v.value()), w.gy.map(|v| v.value()))
}

/// `c[i][j] = h[i][j] - h[1][1] + t + i + j - 2` where `dh = w`.
pub fn coloring_from_form(w: &OneForm, t: Gf3) -> Result<Coloring> {
    if !is_admissible_form(w) {
        return Err(Error::Precondition("form has a component equal to 2".into()));
    }
    let h = antiderivative(w)?;
    let s = w.shape;
    Ok(Coloring::new(Grid2::from_fn(s.m() + 1, s.n() + 1, |i, j| {
        h.get(i, j) - h.get(1, 1) + t + Gf3::new(i as i64 + j as i64 - 2)
    })))
}

/// `(dc - dx - dy, c[1][1])` for a proper coloring `c` of an `(m+1) x (n+1)` grid.
pub fn form_from_coloring(c: &Coloring) -> Result<(OneForm, Gf3)> {
    if c.width() < 3 || c.height() < 3 {
        return Err(Error::InvalidShape { m: c.width().saturating_sub(1), n: c.height().saturating_sub(1) });
    }
    if !c.is_proper() {
        return Err(Error::Precondition("coloring is not proper".into()));
    }
    let shape = GridShape::new(c.width() - 1, c.height() - 1)?;
    let h = ScalarField::new(shape, c.cells.clone())?;
    let dh = exterior_derivative(&h);
    let w = &(&dh - &OneForm::dx(shape)) - &OneForm::dy(shape);
    Ok((w, c.get(1, 1)))
}

/// Backtracking over edges in global order. A vertex is checked as soon as
/// its last edge, `g[i+1][j]`, is assigned, so only consistent prefixes survive.
struct SixSearch {
    edge_count: usize,
    /// Vertices (as edge quadruples) completed when edge `e` is assigned.
    completes_at: Vec<Vec<[usize; 4]>>,
}

impl SixSearch {
    fn new(shape: GridShape) -> Self {
        let mut completes_at = vec![Vec::new(); shape.edge_count()];
        for (i, j) in shape.vertices() {
            let quad = shape.vertex_edges(i, j);
            let last = *quad.iter().max().expect("four edges");
            completes_at[last].push(quad);
        }
        SixSearch { edge_count: shape.edge_count(), completes_at }
    }

    fn run(&self, labels: &mut Vec<u8>, visit: &mut impl FnMut(&[u8])) {
        let e = labels.len();
        if e == self.edge_count {
            visit(labels);
            return;
        }
        for v in 0..2u8 {
            labels.push(v);
            let ok = self.completes_at[e]
                .iter()
                .all(|&[l, t, r, b]| six_vertex_ok(labels[l], labels[t], labels[r], labels[b]));
            if ok {
                self.run(labels, visit);
            }
            labels.pop();
        }
    }
}

fn six_guard(shape: GridShape, guard: SizeGuard) -> Result<()> {
    guard.check(shape.edge_count() as u32)
}

/// All admissible six-vertex states (labels in {0, 1}, tagged F3), in
/// lexicographic order of the edge vector.
pub fn enumerate_six(shape: GridShape, guard: SizeGuard) -> Result<Vec<LatticeState>> {
    six_guard(shape, guard)?;
    let search = SixSearch::new(shape);
    let mut out = Vec::new();
    search.run(&mut Vec::with_capacity(shape.edge_count()), &mut |labels| {
        out.push(LatticeState::from_edges(shape, FieldTag::F3, labels).expect("valid labels"));
    });
    Ok(out)
}

/// Number of admissible six-vertex states.
pub fn count_six(shape: GridShape, guard: SizeGuard) -> Result<u64> {
    six_guard(shape, guard)?;
    let search = SixSearch::new(shape);
    let mut count = 0u64;
    search.run(&mut Vec::with_capacity(shape.edge_count()), &mut |_| count += 1);
    Ok(count)
}

/// Visits every proper 3-coloring of a `width x height` grid, cells in
/// `i`-outer order, colors ascending.
pub fn for_each_coloring(
    width: usize,
    height: usize,
    guard: SizeGuard,
    mut visit: impl FnMut(&Coloring),
) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::Precondition("grid must have at least one cell".into()));
    }
    // 3 * 2^(cells - 1) bounds the number of leaves
    guard.check((width * height + 1) as u32)?;
    let mut cells = Grid2::filled(width, height, Gf3::ZERO);
    fn go(k: usize, cells: &mut Grid2<Gf3>, visit: &mut impl FnMut(&Coloring)) {
        let (w, h) = (cells.width(), cells.height());
        if k == w * h {
            visit(&Coloring::new(cells.clone()));
            return;
        }
        let (i, j) = (k / h + 1, k % h + 1);
        for c in Gf3::elements() {
            if i > 1 && *cells.get(i - 1, j) == c {
                continue;
            }
            if j > 1 && *cells.get(i, j - 1) == c {
                continue;
            }
            cells.set(i, j, c);
            go(k + 1, cells, visit);
        }
    }
    go(0, &mut cells, &mut visit);
    Ok(())
}

/// Number of proper 3-colorings of a `rows x cols` grid graph.
pub fn count_colorings(rows: usize, cols: usize, guard: SizeGuard) -> Result<u64> {
    let mut count = 0u64;
    for_each_coloring(rows, cols, guard, |_| count += 1)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn shape(m: usize, n: usize) -> GridShape {
        GridShape::new(m, n).unwrap()
    }

    fn g3(v: i64) -> Gf3 {
        Gf3::new(v)
    }

    #[test]
    fn partials_of_simple_fields() {
        let s = shape(2, 2);
        let c = ScalarField::constant(s, g3(2));
        assert!(partial_x(&c).values().iter().all(|v| *v == Gf3::ZERO));
        assert!(partial_y(&c).values().iter().all(|v| *v == Gf3::ZERO));
        let x = ScalarField::coordinate_x(s);
        assert!(partial_x(&x).values().iter().all(|v| *v == Gf3::ONE));
        assert!(partial_y(&x).values().iter().all(|v| *v == Gf3::ZERO));
    }

    #[test]
    fn partials_of_product_field() {
        // h = i*j on the 3x3 domain of a 2x2 grid; evaluated directly:
        // D_x h = (i+1)j - ij = j, D_y h = i(j+1) - ij = i.
        let s = shape(2, 2);
        let h = ScalarField::from_fn(s, |i, j| g3((i * j) as i64));
        let px = partial_x(&h);
        let py = partial_y(&h);
        for i in 1..=2 {
            for j in 1..=3 {
                assert_eq!(*px.get(i, j), g3(j as i64));
            }
        }
        for i in 1..=3 {
            for j in 1..=2 {
                assert_eq!(*py.get(i, j), g3(i as i64));
            }
        }
    }

    #[test]
    fn exterior_derivative_examples() {
        let s = shape(3, 2);
        assert_eq!(exterior_derivative(&ScalarField::constant(s, g3(1))), OneForm::zero(s));
        assert_eq!(exterior_derivative(&ScalarField::coordinate_x(s)), OneForm::dx(s));
        let xy = ScalarField::from_fn(s, |i, j| g3((i + j) as i64));
        assert_eq!(exterior_derivative(&xy), &OneForm::dx(s) + &OneForm::dy(s));
    }

    #[test]
    fn closedness() {
        let s = shape(2, 2);
        assert!(is_closed(&OneForm::zero(s)));
        let h = ScalarField::from_fn(s, |i, j| g3((i * i + 2 * j) as i64));
        let mut w = exterior_derivative(&h);
        assert!(is_closed(&w));
        w.set_f(1, 2, w.f(1, 2) + Gf3::ONE);
        assert!(!is_closed(&w));
        assert!(antiderivative(&w).is_err());
    }

    #[test]
    fn antiderivative_examples() {
        let s = shape(3, 3);
        assert_eq!(antiderivative(&OneForm::zero(s)).unwrap(), ScalarField::constant(s, Gf3::ZERO));
        let h = antiderivative(&OneForm::dx(s)).unwrap();
        assert_eq!(h, ScalarField::from_fn(s, |i, _| g3(i as i64 - 1)));
    }

    #[test]
    fn rect_fixture_state() {
        let fig = fixtures::rect_5x3();
        assert!(is_admissible_six(&fig).unwrap());
        let w = state_to_form(&fig).unwrap();
        assert!(is_closed(&w) && is_admissible_form(&w));
        assert_eq!(form_to_state(&w).unwrap(), fig);
        let c = coloring_from_form(&w, Gf3::ZERO).unwrap();
        assert_eq!((c.width(), c.height()), (6, 4));
        assert!(c.is_proper());
    }

    #[test]
    fn six_admissibility_examples() {
        let s = shape(2, 2);
        let z = LatticeState::zero(s, FieldTag::F3).unwrap();
        assert!(is_admissible_six(&z).unwrap());
        let mut bad = z.clone();
        bad.set_f(1, 1, 1);
        assert!(!is_admissible_six(&bad).unwrap());
        assert!(state_to_form(&bad).is_err());
        let mut two = z.clone();
        two.set_g(2, 1, 2);
        assert!(is_admissible_six(&two).is_err());
    }

    #[test]
    fn admissible_form_examples() {
        let s = shape(2, 2);
        assert!(is_admissible_form(&OneForm::zero(s)));
        let mut w = OneForm::zero(s);
        w.set_g(3, 2, g3(2));
        assert!(!is_admissible_form(&w));
        assert!(form_to_state(&w).is_err());
    }

    #[test]
    fn stripe_colorings() {
        let s = shape(2, 3);
        for t in Gf3::elements() {
            let c = coloring_from_form(&OneForm::zero(s), t).unwrap();
            for i in 1..=3 {
                for j in 1..=4 {
                    assert_eq!(c.get(i, j), g3(i as i64 + j as i64 - 2) + t);
                }
            }
            let (w, t_back) = form_from_coloring(&c).unwrap();
            assert_eq!(w, OneForm::zero(s));
            assert_eq!(t_back, t);
        }
    }

    #[test]
    fn improper_coloring_rejected() {
        let c = Coloring::new(Grid2::filled(3, 3, Gf3::ZERO));
        assert!(!c.is_proper());
        assert!(form_from_coloring(&c).is_err());
    }

    #[test]
    fn small_coloring_counts() {
        assert_eq!(count_colorings(1, 1, SizeGuard::default()).unwrap(), 3);
        assert_eq!(count_colorings(1, 2, SizeGuard::default()).unwrap(), 6);
        assert!(count_colorings(10, 10, SizeGuard::default()).is_err());
    }

    #[test]
    fn six_guard_trips() {
        assert!(count_six(shape(4, 4), SizeGuard::default()).is_err());
        assert!(count_six(shape(2, 2), SizeGuard::new(11)).is_err());
    }
}
