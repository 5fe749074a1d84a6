//! Property suites behind `verify`.

use std::collections::BTreeSet;
use std::path::PathBuf;

use latticeforms::algebra::{FieldTag, Gf3};
use latticeforms::eightvertex::{
    boundary_parity, construct_state, count_total, defect_vector, is_admissible_eight, DefectMap,
};
use latticeforms::forms::{
    antiderivative, coloring_from_form, count_colorings, count_six, enumerate_six, exterior_derivative,
    form_from_coloring, form_to_state, is_admissible_six, is_closed, state_to_form, Coloring, OneForm, ScalarField,
};
use latticeforms::grid::Grid2;
use latticeforms::toroidal::{
    decompose, exact_potential, has_toroidal_boundary, is_closed_toroidal, require_prime_to_three, sparse_fibers,
    state_to_sparse, toroidal_derivatives, PeriodicField, ToroidalOneForm,
};
use latticeforms::{BoundarySpec, Error, GridShape, LatticeState, SizeGuard};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliResult;
use crate::inputs::{gf3_grid, read_state, shape_json, ShapeArgs};
use crate::lattice::ModelArg;
use crate::output::{Output, Table};

#[derive(Debug, clap::Args)]
pub struct SuiteArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Random instances per randomized property.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(Debug, clap::Subcommand)]
pub enum VerifyCommand {
    /// Closed forms on a rectangle are exact.
    Poincare(SuiteArgs),
    /// States, closed forms and 3-colorings correspond.
    Bijection(SuiteArgs),
    /// Unique splitting of closed toroidal forms; needs m and n prime to 3.
    Cohomology(SuiteArgs),
    /// Groups admissible toroidal states by sparse potential; needs m and n prime to 3.
    SparseFibers(SuiteArgs),
    /// Rank of the eight-vertex defect map and the explicit boundary construction.
    DefectRank(SuiteArgs),
    /// Admissibility of a single state file.
    State {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModelArg::Six)]
        model: ModelArg,
    },
}

/// One checked property.
struct Item {
    id: String,
    pass: bool,
    checked: usize,
    counterexample: Option<Value>,
}

impl Item {
    fn new(id: &str) -> Self {
        Item { id: id.to_string(), pass: true, checked: 0, counterexample: None }
    }

    /// Records one instance; keeps the first failure.
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(witness());
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({"id": self.id, "pass": self.pass, "checked": self.checked});
        if let Some(c) = &self.counterexample {
            v["counterexample"] = c.clone();
        }
        v
    }
}

fn finish(suite: &str, mut head: serde_json::Map<String, Value>, mut items: Vec<Item>) -> Output {
    items.sort_by(|a, b| a.id.cmp(&b.id));
    let all_pass = items.iter().all(|i| i.pass);
    head.insert("suite".into(), json!(suite));
    head.insert("results".into(), Value::Array(items.iter().map(Item::to_json).collect()));
    head.insert("all_pass".into(), json!(all_pass));
    let table = Table {
        header: vec!["id".into(), "pass".into(), "checked".into()],
        rows: items.iter().map(|i| vec![i.id.clone(), i.pass.to_string(), i.checked.to_string()]).collect(),
    };
    Output::new(Value::Object(head)).with_table(table).with_ok(all_pass)
}

fn head(shape: GridShape, seed: Option<u64>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("shape".into(), shape_json(shape));
    if let Some(s) = seed {
        m.insert("seed".into(), json!(s));
    }
    m
}

fn form_json(w: &OneForm) -> Value {
    json!({"f": gf3_grid(w.fx()), "g": gf3_grid(w.gy())})
}

fn field_json(h: &ScalarField) -> Value {
    json!(gf3_grid(h.grid()))
}

fn toroidal_json(w: &ToroidalOneForm) -> Value {
    let s = w.shape();
    let grid = |pick: &dyn Fn(i64, i64) -> Gf3| -> Vec<Vec<u8>> {
        (1..=s.m() as i64).map(|i| (1..=s.n() as i64).map(|j| pick(i, j).value()).collect()).collect()
    };
    json!({"f": grid(&|i, j| w.f(i, j)), "g": grid(&|i, j| w.g(i, j))})
}

fn random_gf3(rng: &mut ChaCha8Rng) -> Gf3 {
    Gf3::new(rng.gen_range(0..3))
}

fn random_field(rng: &mut ChaCha8Rng, shape: GridShape) -> ScalarField {
    ScalarField::from_fn(shape, |_, _| random_gf3(rng))
}

/// Free `f` and bottom row of `g`; the rest of `g` follows from closedness.
fn random_closed_form(rng: &mut ChaCha8Rng, shape: GridShape) -> OneForm {
    let (m, n) = (shape.m(), shape.n());
    let f = Grid2::from_fn(m, n + 1, |_, _| random_gf3(rng));
    let mut g = Grid2::filled(m + 1, n, Gf3::ZERO);
    for j in 1..=n {
        g.set(1, j, random_gf3(rng));
        for i in 1..=m {
            let next = *g.get(i, j) + *f.get(i, j + 1) - *f.get(i, j);
            g.set(i + 1, j, next);
        }
    }
    OneForm::new(shape, f, g).expect("grid sizes match shape")
}

fn random_coloring(rng: &mut ChaCha8Rng, w: usize, h: usize) -> Coloring {
    let mut cells = Grid2::filled(w, h, Gf3::ZERO);
    for i in 1..=w {
        for j in 1..=h {
            let allowed: Vec<Gf3> = Gf3::elements()
                .filter(|c| !(i > 1 && cells.get(i - 1, j) == c) && !(j > 1 && cells.get(i, j - 1) == c))
                .collect();
            cells.set(i, j, allowed[rng.gen_range(0..allowed.len())]);
        }
    }
    Coloring::new(cells)
}

fn poincare(args: &SuiteArgs, seed: u64, guard: SizeGuard) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exact_closed = Item::new("poincare.exact-forms-closed");
    let mut closed_exact = Item::new("poincare.closed-forms-exact");
    let mut unique = Item::new("poincare.potential-unique");
    for _ in 0..args.samples {
        let h = random_field(&mut rng, shape);
        let dh = exterior_derivative(&h);
        exact_closed.record(is_closed(&dh), || field_json(&h));
        let back = antiderivative(&dh);
        let ok = back.as_ref().is_ok_and(|b| {
            (1..=shape.m() + 1).all(|i| (1..=shape.n() + 1).all(|j| b.get(i, j) == h.get(i, j) - h.get(1, 1)))
        });
        unique.record(ok, || field_json(&h));

        let w = random_closed_form(&mut rng, shape);
        let ok = antiderivative(&w).is_ok_and(|a| exterior_derivative(&a) == w);
        closed_exact.record(ok, || form_json(&w));
    }
    let mut items = vec![exact_closed, closed_exact, unique];
    // every form on small grids: closed ones integrate, the rest are rejected
    let (fc, gc) = (shape.f_count(), shape.g_count());
    let log2 = ((fc + gc) as f64 * 3f64.log2()).ceil() as u32;
    if guard.check(log2).is_ok() {
        let mut all = Item::new("poincare.exhaustive");
        let mut digits = vec![0i64; fc + gc];
        loop {
            let w = OneForm::from_fns(
                shape,
                |i, j| Gf3::new(digits[shape.f_index(i, j)]),
                |i, j| Gf3::new(digits[shape.g_index(i, j)]),
            );
            let ok = match antiderivative(&w) {
                Ok(a) => is_closed(&w) && exterior_derivative(&a) == w,
                Err(_) => !is_closed(&w),
            };
            all.record(ok, || form_json(&w));
            let Some(k) = digits.iter().position(|&d| d < 2) else { break };
            digits[..k].iter_mut().for_each(|d| *d = 0);
            digits[k] += 1;
        }
        items.push(all);
    }
    Ok(finish("poincare", head(shape, Some(seed)), items))
}

fn bijection(args: &SuiteArgs, seed: u64, guard: SizeGuard) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states = enumerate_six(shape, guard)?;

    let mut state_form = Item::new("bijection.state-form-state");
    let mut form_coloring = Item::new("bijection.form-coloring-form");
    for s in &states {
        let w = state_to_form(s)?;
        state_form.record(is_closed(&w) && form_to_state(&w).as_ref() == Ok(s), || s.to_json_value());
        for t in Gf3::elements() {
            let back = coloring_from_form(&w, t).and_then(|c| form_from_coloring(&c));
            form_coloring.record(back == Ok((w.clone(), t)), || json!({"form": form_json(&w), "t": t.value()}));
        }
    }

    let mut coloring_form = Item::new("bijection.coloring-form-coloring");
    for _ in 0..args.samples {
        let c = random_coloring(&mut rng, shape.m() + 1, shape.n() + 1);
        let back = form_from_coloring(&c).and_then(|(w, t)| coloring_from_form(&w, t));
        coloring_form.record(back.as_ref() == Ok(&c), || json!(c.to_nested()));
    }

    let mut counts = Item::new("bijection.three-colorings-per-state");
    let six = count_six(shape, guard)?;
    let colorings = count_colorings(shape.m() + 1, shape.n() + 1, guard)?;
    counts
        .record(3 * six == colorings && six == states.len() as u64, || json!({"states": six, "colorings": colorings}));
    Ok(finish("bijection", head(shape, Some(seed)), vec![state_form, form_coloring, coloring_form, counts]))
}

/// Uniform closed toroidal form: `f` with equal column sums, `g` integrated from its bottom row.
fn random_closed_toroidal(rng: &mut ChaCha8Rng, shape: GridShape) -> ToroidalOneForm {
    let (m, n) = (shape.m(), shape.n());
    loop {
        let f = Grid2::from_fn(m, n, |_, _| random_gf3(rng));
        let col = |j: usize| (1..=m).map(|i| *f.get(i, j)).sum::<Gf3>();
        if (2..=n).any(|j| col(j) != col(1)) {
            continue;
        }
        let fj = |i: usize, j: usize| *f.get(i, (j - 1) % n + 1);
        let mut g = Grid2::filled(m, n, Gf3::ZERO);
        for j in 1..=n {
            g.set(1, j, random_gf3(rng));
            for i in 1..m {
                let next = *g.get(i, j) + fj(i, j + 1) - fj(i, j);
                g.set(i + 1, j, next);
            }
        }
        return ToroidalOneForm::new(shape, f, g).expect("grid sizes match shape");
    }
}

fn cohomology(args: &SuiteArgs, seed: u64) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    require_prime_to_three(shape)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reconstruct = Item::new("cohomology.reconstructs");
    let mut unique = Item::new("cohomology.unique");
    let mut exact = Item::new("cohomology.exact-iff-zero-class");
    for _ in 0..args.samples {
        let w = random_closed_toroidal(&mut rng, shape);
        let d = decompose(&w);
        reconstruct
            .record(is_closed_toroidal(&w) && d.as_ref().is_ok_and(|d| d.reconstruct() == w), || toroidal_json(&w));
        if let Ok(d) = d {
            let zero_class = d.r == Gf3::ZERO && d.s == Gf3::ZERO;
            exact.record(exact_potential(&w).is_some() == zero_class, || toroidal_json(&w));
        }

        let (r, s) = (random_gf3(&mut rng), random_gf3(&mut rng));
        let h = PeriodicField::from_fn(shape, |i, j| if (i, j) == (1, 1) { Gf3::ZERO } else { random_gf3(&mut rng) });
        let w = &ToroidalOneForm::constant(shape, r, s) + &toroidal_derivatives(&h);
        let back = decompose(&w);
        unique.record(
            back.as_ref().is_ok_and(|d| (d.r, d.s, &d.h) == (r, s, &h)),
            || json!({"r": r.value(), "s": s.value(), "h": h.to_nested()}),
        );
        exact.record(exact_potential(&w).is_some() == (r == Gf3::ZERO && s == Gf3::ZERO), || toroidal_json(&w));
    }
    Ok(finish("cohomology", head(shape, Some(seed)), vec![reconstruct, unique, exact]))
}

fn fibers(args: &SuiteArgs, guard: SizeGuard) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    let report = sparse_fibers(shape, guard)?;
    let mut partition = Item::new("sparse-fibers.partition");
    partition.record(report.partitions_states, || json!({"total_states": report.total_states}));
    let mut keys = Item::new("sparse-fibers.keys-sparse");
    keys.record(report.keys_are_sparse_functions, || json!(null));
    let mut maps_back = Item::new("sparse-fibers.maps-to-key");
    let mut seen = BTreeSet::new();
    for f in &report.fibers {
        for s in &f.states {
            let ok = state_to_sparse(s).as_ref() == Ok(&f.h) && seen.insert(s.clone());
            maps_back.record(ok, || json!({"h": f.h.to_nested(), "state": s.to_json_value()}));
        }
    }
    let mut h = head(shape, None);
    h.insert("total_states".into(), json!(report.total_states));
    h.insert("sparse_functions".into(), json!(report.sparse_functions));
    h.insert(
        "size_histogram".into(),
        report.size_histogram.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>().into(),
    );
    h.insert("sizes_match_class_choices".into(), json!(report.sizes_match_class_choices));
    h.insert("injective".into(), json!(report.fibers.iter().all(|f| f.fiber_size() == 1)));
    h.insert("fibers".into(), serde_json::to_value(&report.fibers).expect("fibers serialize"));
    Ok(finish("sparse-fibers", h, vec![partition, keys, maps_back]))
}

fn defect_rank(args: &SuiteArgs, seed: u64) -> CliResult<Output> {
    let shape = args.shape.shape()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let map = DefectMap::new(shape);
    let mut rank = Item::new("defect-rank.surjective");
    rank.record(map.rank() == shape.vertex_count(), || json!({"rank": map.rank()}));
    let mut total = Item::new("defect-rank.total-count");
    let expected = BigUint::from(1u8) << (shape.m() + shape.n() + shape.m() * shape.n());
    total.record(count_total(shape).as_ref() == Ok(&expected), || json!(null));

    let mut construct = Item::new("defect-rank.construction");
    for _ in 0..args.samples {
        let mut side = |len: usize| -> Vec<u8> { (0..len).map(|_| rng.gen_range(0..2)).collect() };
        let (m, n) = (shape.m(), shape.n());
        let b = BoundarySpec::new(shape, FieldTag::F2, side(m), side(m), side(n), side(n))?;
        let ok = match construct_state(&b) {
            Ok(s) => b.matches(&s) && is_admissible_eight(&s),
            Err(Error::OddBoundary) => boundary_parity(&b).value() == 1,
            Err(_) => false,
        };
        construct.record(ok, || b.to_json_value());
    }
    Ok(finish("defect-rank", head(shape, Some(seed)), vec![rank, total, construct]))
}

/// Vertices whose local configuration is not allowed by `model`.
fn bad_vertices(s: &LatticeState, model: ModelArg) -> CliResult<Vec<Value>> {
    let mut bad = Vec::new();
    let shape = s.shape();
    for (i, j) in shape.vertices() {
        let e = s.edges_at_vertex(i, j)?;
        let (l, t, r, b) = (e.left as i64, e.top as i64, e.right as i64, e.bottom as i64);
        let ok = match model {
            ModelArg::Eight => [l, t, r, b].iter().all(|&v| v <= 1) && (l + t + r + b) % 2 == 0,
            ModelArg::Six | ModelArg::Toroidal => {
                [l, t, r, b].iter().all(|&v| v <= 1) && (r - l - t + b).rem_euclid(3) == 0
            }
        };
        if !ok {
            bad.push(json!({"i": i, "j": j, "left": l, "top": t, "right": r, "bottom": b}));
        }
    }
    Ok(bad)
}

fn state(input: &std::path::Path, model: ModelArg) -> CliResult<Output> {
    let s = read_state(input)?;
    let mut local = Item::new("state.local-rules");
    let bad = bad_vertices(&s, model)?;
    local.record(bad.is_empty(), || json!(bad));
    let mut items = vec![local];
    let admissible = match model {
        ModelArg::Six => is_admissible_six(&s)?,
        ModelArg::Eight => defect_vector(&s).is_ok() && is_admissible_eight(&s),
        ModelArg::Toroidal => {
            let mut periodic = Item::new("state.toroidal-boundary");
            periodic.record(has_toroidal_boundary(&s), || s.boundary_of().to_json_value());
            items.push(periodic);
            has_toroidal_boundary(&s) && is_admissible_six(&s)?
        }
    };
    let mut h = head(s.shape(), None);
    h.insert("model".into(), json!(format!("{model:?}").to_lowercase()));
    h.insert("admissible".into(), json!(admissible));
    Ok(finish("state", h, items))
}

pub fn run(cmd: &VerifyCommand, seed: u64, guard: SizeGuard) -> CliResult<Output> {
    match cmd {
        VerifyCommand::Poincare(a) => poincare(a, seed, guard),
        VerifyCommand::Bijection(a) => bijection(a, seed, guard),
        VerifyCommand::Cohomology(a) => cohomology(a, seed),
        VerifyCommand::SparseFibers(a) => fibers(a, guard),
        VerifyCommand::DefectRank(a) => defect_rank(a, seed),
        VerifyCommand::State { input, model } => state(input, *model),
    }
}
