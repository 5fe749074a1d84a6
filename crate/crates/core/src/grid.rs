//! Rectangular lattices: shapes, edge labels, boundaries and the JSON state format.
//!
//! A lattice with `m` columns and `n` rows of interior vertices carries
//! vertical edge labels `f[i][j]` for `i in 1..=m, j in 1..=n+1` and horizontal
//! edge labels `g[i][j]` for `i in 1..=m+1, j in 1..=n`. Column `i` counts from
//! the left, row `j` from the bottom. The vertex `(i, j)` sees
//!
//! ```text
//!              f[i][j+1]
//!                  |
//!   g[i][j]  ---- (i,j) ----  g[i+1][j]
//!                  |
//!               f[i][j]
//! ```
//!
//! All public indices are 1-based; storage is 0-based.

use serde::{Deserialize, Serialize};

use crate::algebra::FieldTag;
use crate::error::{Error, Result};

/// Interior vertex counts of a rectangular lattice: `m` columns, `n` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GridShape {
    m: usize,
    n: usize,
}

impl GridShape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 || n < 2 {
            return Err(Error::InvalidShape { m, n });
        }
        Ok(GridShape { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertical edges, `m(n+1)`.
    pub fn f_count(&self) -> usize {
        self.m * (self.n + 1)
    }

    /// Number of horizontal edges, `(m+1)n`.
    pub fn g_count(&self) -> usize {
        (self.m + 1) * self.n
    }

    pub fn edge_count(&self) -> usize {
        self.f_count() + self.g_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    /// Position of `f[i][j]` in the global edge order (all `f`, `i` outer, then all `g`).
    pub fn f_index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&i) && (1..=self.n + 1).contains(&j));
        (i - 1) * (self.n + 1) + (j - 1)
    }

    /// Position of `g[i][j]` in the global edge order.
    pub fn g_index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.m + 1).contains(&i) && (1..=self.n).contains(&j));
        self.f_count() + (i - 1) * self.n + (j - 1)
    }

    /// Edge indices around vertex `(i, j)` as `[left, top, right, bottom]`.
    pub fn vertex_edges(&self, i: usize, j: usize) -> [usize; 4] {
        [self.g_index(i, j), self.f_index(i, j + 1), self.g_index(i + 1, j), self.f_index(i, j)]
    }

    /// All interior vertices, `i` outer.
    pub fn vertices(self) -> impl Iterator<Item = (usize, usize)> {
        (1..=self.m).flat_map(move |i| (1..=self.n).map(move |j| (i, j)))
    }

    pub fn is_boundary_edge(&self, idx: usize) -> bool {
        if idx < self.f_count() {
            let j = idx % (self.n + 1) + 1;
            j == 1 || j == self.n + 1
        } else {
            let i = (idx - self.f_count()) / self.n + 1;
            i == 1 || i == self.m + 1
        }
    }

    /// Interior edges in global order.
    pub fn interior_edges(&self) -> Vec<usize> {
        (0..self.edge_count()).filter(|&e| !self.is_boundary_edge(e)).collect()
    }

    pub fn boundary_edge_count(&self) -> usize {
        2 * self.m + 2 * self.n
    }
}

/// Values on a `width x height` block of 1-based grid points, `i` outer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grid2<T> {
    width: usize,
    height: usize,
    data: Vec<T>,
}

impl<T: Clone> Grid2<T> {
    pub fn filled(width: usize, height: usize, value: T) -> Self {
        Grid2 { width, height, data: vec![value; width * height] }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(width * height);
        for i in 1..=width {
            for j in 1..=height {
                data.push(f(i, j));
            }
        }
        Grid2 { width, height, data }
    }

    pub fn from_data(width: usize, height: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::DimensionMismatch(format!("{} values for a {}x{} grid", data.len(), width, height)));
        }
        Ok(Grid2 { width, height, data })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        (1..=self.width).contains(&i) && (1..=self.height).contains(&j)
    }

    /// Value at 1-based `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(self.contains(i, j), "({i}, {j}) outside {}x{} grid", self.width, self.height);
        &self.data[(i - 1) * self.height + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(self.contains(i, j), "({i}, {j}) outside {}x{} grid", self.width, self.height);
        self.data[(i - 1) * self.height + (j - 1)] = v;
    }

    pub fn values(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Grid2<U> {
        Grid2 { width: self.width, height: self.height, data: self.data.iter().map(f).collect() }
    }

    /// Nested rows indexed `[i-1][j-1]`.
    pub fn to_nested(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.height.max(1)).map(<[T]>::to_vec).collect()
    }
}

/// The four labels around one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexEdges {
    pub left: u8,
    pub top: u8,
    pub right: u8,
    pub bottom: u8,
}

/// An edge labelling `(f, g)` over F2 or F3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeState {
    shape: GridShape,
    field: FieldTag,
    f: Grid2<u8>,
    g: Grid2<u8>,
}

fn check_state_field(field: FieldTag) -> Result<u8> {
    match field {
        FieldTag::F2 => Ok(2),
        FieldTag::F3 => Ok(3),
        FieldTag::Q => {
            Err(Error::Format { field: "field".into(), message: "lattice states are labelled over F2 or F3".into() })
        }
    }
}

impl LatticeState {
    pub fn zero(shape: GridShape, field: FieldTag) -> Result<Self> {
        check_state_field(field)?;
        Ok(LatticeState {
            shape,
            field,
            f: Grid2::filled(shape.m, shape.n + 1, 0),
            g: Grid2::filled(shape.m + 1, shape.n, 0),
        })
    }

    /// Builds a state from `f` (`m x (n+1)`) and `g` (`(m+1) x n`) grids.
    pub fn new(shape: GridShape, field: FieldTag, f: Grid2<u8>, g: Grid2<u8>) -> Result<Self> {
        let p = check_state_field(field)?;
        if f.width() != shape.m || f.height() != shape.n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "f must be {}x{}, got {}x{}",
                shape.m,
                shape.n + 1,
                f.width(),
                f.height()
            )));
        }
        if g.width() != shape.m + 1 || g.height() != shape.n {
            return Err(Error::DimensionMismatch(format!(
                "g must be {}x{}, got {}x{}",
                shape.m + 1,
                shape.n,
                g.width(),
                g.height()
            )));
        }
        if let Some(&v) = f.values().iter().chain(g.values()).find(|&&v| v >= p) {
            return Err(Error::InvalidValue {
                field: if p == 2 { "F2" } else { "F3" },
                location: "state".into(),
                value: v as i64,
            });
        }
        Ok(LatticeState { shape, field, f, g })
    }

    /// Builds a state from a flat edge vector in global edge order.
    pub fn from_edges(shape: GridShape, field: FieldTag, edges: &[u8]) -> Result<Self> {
        if edges.len() != shape.edge_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} edge values for a shape with {} edges",
                edges.len(),
                shape.edge_count()
            )));
        }
        let (fv, gv) = edges.split_at(shape.f_count());
        let f = Grid2::from_data(shape.m, shape.n + 1, fv.to_vec())?;
        let g = Grid2::from_data(shape.m + 1, shape.n, gv.to_vec())?;
        Self::new(shape, field, f, g)
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn f(&self, i: usize, j: usize) -> u8 {
        *self.f.get(i, j)
    }

    pub fn g(&self, i: usize, j: usize) -> u8 {
        *self.g.get(i, j)
    }

    pub fn f_grid(&self) -> &Grid2<u8> {
        &self.f
    }

    pub fn g_grid(&self) -> &Grid2<u8> {
        &self.g
    }

    pub fn set_f(&mut self, i: usize, j: usize, v: u8) {
        self.f.set(i, j, v % self.field.characteristic());
    }

    pub fn set_g(&mut self, i: usize, j: usize, v: u8) {
        self.g.set(i, j, v % self.field.characteristic());
    }

    /// Flat edge vector: all `f` (`i` outer, `j` inner), then all `g`.
    pub fn edges(&self) -> Vec<u8> {
        self.f.values().iter().chain(self.g.values()).copied().collect()
    }

    /// Same labels, retagged. Fails if a label does not fit the new field.
    pub fn with_field(&self, field: FieldTag) -> Result<Self> {
        Self::new(self.shape, field, self.f.clone(), self.g.clone())
    }

    /// `(left, top, right, bottom)` = `(g[i][j], f[i][j+1], g[i+1][j], f[i][j])`.
    pub fn edges_at_vertex(&self, i: usize, j: usize) -> Result<VertexEdges> {
        if !(1..=self.shape.m).contains(&i) || !(1..=self.shape.n).contains(&j) {
            return Err(Error::IndexOutOfRange { what: "interior vertex", i, j });
        }
        Ok(VertexEdges { left: self.g(i, j), top: self.f(i, j + 1), right: self.g(i + 1, j), bottom: self.f(i, j) })
    }

    pub fn boundary_of(&self) -> BoundarySpec {
        let (m, n) = (self.shape.m, self.shape.n);
        BoundarySpec {
            shape: self.shape,
            field: self.field,
            f_bottom: (1..=m).map(|i| self.f(i, 1)).collect(),
            f_top: (1..=m).map(|i| self.f(i, n + 1)).collect(),
            g_left: (1..=n).map(|j| self.g(1, j)).collect(),
            g_right: (1..=n).map(|j| self.g(m + 1, j)).collect(),
        }
    }

    /// True when every label is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.f.values().iter().chain(self.g.values()).all(|&v| v <= 1)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.shape.m,
            "n": self.shape.n,
            "field": self.field,
            "f": self.f.to_nested(),
            "g": self.g.to_nested(),
        })
    }

    /// Pretty JSON document `{"m", "n", "field", "f", "g"}`.
    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("state serializes")
    }

    pub fn deserialize(text: &str) -> Result<Self> {
        let raw: RawState = serde_json::from_str(text)?;
        raw.validate()
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let raw: RawState = serde_json::from_value(v)?;
        raw.validate()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawState {
    m: usize,
    n: usize,
    field: FieldTag,
    f: Vec<Vec<i64>>,
    g: Vec<Vec<i64>>,
}

fn validate_array(name: &str, rows: &[Vec<i64>], width: usize, height: usize, p: u8) -> Result<Grid2<u8>> {
    if rows.len() != width {
        return Err(Error::Format {
            field: name.into(),
            message: format!("expected {width} rows, found {}", rows.len()),
        });
    }
    let mut data = Vec::with_capacity(width * height);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != height {
            return Err(Error::Format {
                field: format!("{name}[{i}]"),
                message: format!("expected {height} entries, found {}", row.len()),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if !(0..p as i64).contains(&v) {
                return Err(Error::Format {
                    field: format!("{name}[{i}][{j}]"),
                    message: format!("{v} is not an element of F{p}"),
                });
            }
            data.push(v as u8);
        }
    }
    Grid2::from_data(width, height, data)
}

impl RawState {
    fn validate(self) -> Result<LatticeState> {
        let shape = GridShape::new(self.m, self.n)?;
        let p = check_state_field(self.field)?;
        let f = validate_array("f", &self.f, shape.m, shape.n + 1, p)?;
        let g = validate_array("g", &self.g, shape.m + 1, shape.n, p)?;
        LatticeState::new(shape, self.field, f, g)
    }
}

/// The `2m + 2n` boundary labels of a lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundarySpec {
    pub shape: GridShape,
    pub field: FieldTag,
    /// `f[i][1]`, `i = 1..=m`
    pub f_bottom: Vec<u8>,
    /// `f[i][n+1]`
    pub f_top: Vec<u8>,
    /// `g[1][j]`, `j = 1..=n`
    pub g_left: Vec<u8>,
    /// `g[m+1][j]`
    pub g_right: Vec<u8>,
}

impl BoundarySpec {
    pub fn zero(shape: GridShape, field: FieldTag) -> Self {
        BoundarySpec {
            shape,
            field,
            f_bottom: vec![0; shape.m],
            f_top: vec![0; shape.m],
            g_left: vec![0; shape.n],
            g_right: vec![0; shape.n],
        }
    }

    pub fn new(
        shape: GridShape,
        field: FieldTag,
        f_bottom: Vec<u8>,
        f_top: Vec<u8>,
        g_left: Vec<u8>,
        g_right: Vec<u8>,
    ) -> Result<Self> {
        let p = check_state_field(field)?;
        let b = BoundarySpec { shape, field, f_bottom, f_top, g_left, g_right };
        for (name, v, len) in [
            ("f_bottom", &b.f_bottom, shape.m),
            ("f_top", &b.f_top, shape.m),
            ("g_left", &b.g_left, shape.n),
            ("g_right", &b.g_right, shape.n),
        ] {
            if v.len() != len {
                return Err(Error::Format {
                    field: name.into(),
                    message: format!("expected {len} entries, found {}", v.len()),
                });
            }
            if let Some(pos) = v.iter().position(|&x| x >= p) {
                return Err(Error::Format {
                    field: format!("{name}[{pos}]"),
                    message: format!("{} is not an element of F{p}", v[pos]),
                });
            }
        }
        Ok(b)
    }

    /// Builds the boundary whose labels are the given bits in the order
    /// `f_bottom, f_top, g_left, g_right`. Bit 0 of `bits` is the last label.
    pub fn from_bits(shape: GridShape, bits: u64) -> Self {
        let total = shape.boundary_edge_count();
        let labels: Vec<u8> = (0..total).map(|k| ((bits >> (total - 1 - k)) & 1) as u8).collect();
        let (m, n) = (shape.m, shape.n);
        BoundarySpec {
            shape,
            field: FieldTag::F2,
            f_bottom: labels[..m].to_vec(),
            f_top: labels[m..2 * m].to_vec(),
            g_left: labels[2 * m..2 * m + n].to_vec(),
            g_right: labels[2 * m + n..].to_vec(),
        }
    }

    /// All labels in the order `f_bottom, f_top, g_left, g_right`.
    pub fn labels(&self) -> impl Iterator<Item = u8> + '_ {
        self.f_bottom.iter().chain(&self.f_top).chain(&self.g_left).chain(&self.g_right).copied()
    }

    /// `(edge index, label)` pairs for every boundary edge.
    pub fn edge_assignments(&self) -> Vec<(usize, u8)> {
        let s = self.shape;
        let mut out = Vec::with_capacity(s.boundary_edge_count());
        for i in 1..=s.m {
            out.push((s.f_index(i, 1), self.f_bottom[i - 1]));
            out.push((s.f_index(i, s.n + 1), self.f_top[i - 1]));
        }
        for j in 1..=s.n {
            out.push((s.g_index(1, j), self.g_left[j - 1]));
            out.push((s.g_index(s.m + 1, j), self.g_right[j - 1]));
        }
        out
    }

    /// True if `state` carries exactly these boundary labels.
    pub fn matches(&self, state: &LatticeState) -> bool {
        state.shape() == self.shape
            && self.edge_assignments().iter().all(|&(e, v)| {
                let s = self.shape;
                if e < s.f_count() {
                    state.f_grid().values()[e] == v
                } else {
                    state.g_grid().values()[e - s.f_count()] == v
                }
            })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.shape.m,
            "n": self.shape.n,
            "field": self.field,
            "f_bottom": self.f_bottom,
            "f_top": self.f_top,
            "g_left": self.g_left,
            "g_right": self.g_right,
        })
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("boundary serializes")
    }

    pub fn deserialize(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            m: usize,
            n: usize,
            #[serde(default = "default_f2")]
            field: FieldTag,
            f_bottom: Vec<u8>,
            f_top: Vec<u8>,
            g_left: Vec<u8>,
            g_right: Vec<u8>,
        }
        fn default_f2() -> FieldTag {
            FieldTag::F2
        }
        let raw: Raw = serde_json::from_str(text)?;
        let shape = GridShape::new(raw.m, raw.n)?;
        Self::new(shape, raw.field, raw.f_bottom, raw.f_top, raw.g_left, raw.g_right)
    }
}
