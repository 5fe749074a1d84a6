use latticeforms::algebra::Gf3;
use latticeforms::fixtures;
use latticeforms::grid::GridShape;
use latticeforms::toroidal::*;
use latticeforms::{Error, SizeGuard};
use proptest::prelude::*;

fn shape(m: usize, n: usize) -> GridShape {
    GridShape::new(m, n).unwrap()
}

fn all_forms(sh: GridShape) -> impl Iterator<Item = ToroidalOneForm> {
    let cells = sh.m() * sh.n();
    (0..3u64.pow(2 * cells as u32)).map(move |code| {
        let digit = |k: usize| Gf3::new((code / 3u64.pow(k as u32) % 3) as i64);
        ToroidalOneForm::from_fns(
            sh,
            |i, j| digit((i - 1) * sh.n() + (j - 1)),
            |i, j| digit(cells + (i - 1) * sh.n() + (j - 1)),
        )
    })
}

#[test]
fn closed_forms_at_2x2_decompose_uniquely() {
    let sh = shape(2, 2);
    let mut closed = 0;
    let mut seen = std::collections::BTreeSet::new();
    for w in all_forms(sh) {
        if !is_closed_toroidal(&w) {
            assert!(decompose(&w).is_err());
            continue;
        }
        closed += 1;
        let d = decompose(&w).unwrap();
        assert_eq!(d.reconstruct(), w);
        assert_eq!(d.h.get(1, 1), Gf3::ZERO);
        assert!(seen.insert((d.r, d.s, d.h.clone())));
    }
    // a closed form is determined by (r, s, h) with h[1][1] = 0
    assert_eq!(closed, 9 * 3usize.pow(3));
}

#[test]
fn exactness_matches_zero_class() {
    let sh = shape(2, 2);
    for w in all_forms(sh).filter(is_closed_toroidal) {
        let d = decompose(&w).unwrap();
        let exact = exact_potential(&w);
        assert_eq!(exact.is_some(), d.r == Gf3::ZERO && d.s == Gf3::ZERO);
        if let Some(h) = exact {
            assert_eq!(h, d.h);
        }
    }
}

#[test]
fn admissible_states_decompose_at_small_tori() {
    for sh in [shape(2, 2), shape(4, 2), shape(2, 4)] {
        let states = enumerate_toroidal(sh, SizeGuard::default()).unwrap();
        assert!(states.windows(2).all(|p| p[0] < p[1]));
        for s in &states {
            assert!(is_admissible_toroidal(s).unwrap());
            let w = toroidal_form_of_state(s).unwrap();
            let d = decompose(&w).unwrap();
            assert_eq!(d.reconstruct(), w);
            let h = state_to_sparse(s).unwrap();
            assert!(is_sparse(&h));
            assert_eq!(state_of_toroidal_form(&w).unwrap(), *s);
        }
    }
}

#[test]
fn toroidal_states_match_direct_filter() {
    // every six-vertex state of the rectangle whose opposite sides agree
    let sh = shape(2, 2);
    let direct: Vec<_> = latticeforms::forms::enumerate_six(sh, SizeGuard::default())
        .unwrap()
        .into_iter()
        .filter(has_toroidal_boundary)
        .collect();
    assert_eq!(enumerate_toroidal(sh, SizeGuard::default()).unwrap(), direct);
}

#[test]
fn fiber_reports() {
    for sh in [shape(2, 2), shape(4, 2), shape(2, 4)] {
        let rep = sparse_fibers(sh, SizeGuard::default()).unwrap();
        assert!(rep.partitions_states, "{sh:?}");
        assert!(rep.keys_are_sparse_functions, "{sh:?}");
        assert!(rep.sizes_match_class_choices, "{sh:?}");
        for f in &rep.fibers {
            for s in &f.states {
                assert_eq!(state_to_sparse(s).unwrap(), f.h);
                let d = decompose(&toroidal_form_of_state(s).unwrap()).unwrap();
                assert!(f.r_choices.contains(&d.r) && f.s_choices.contains(&d.s));
            }
        }
    }
}

#[test]
fn fiber_json_shape() {
    let rep = sparse_fibers(shape(2, 2), SizeGuard::default()).unwrap();
    let v = serde_json::to_value(&rep.fibers[0]).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, vec!["fiber_size", "h", "r_choices", "s_choices"]);
    assert_eq!(v["h"], serde_json::json!([[0, 0], [0, 0]]));
    assert_eq!(v["fiber_size"], 4);
}

#[test]
fn torus_fixture_blocked_by_divisibility() {
    let fig = fixtures::torus_5x3();
    assert!(is_admissible_toroidal(&fig).unwrap());
    assert_eq!(state_to_sparse(&fig), Err(Error::DivisibleByThree { m: 5, n: 3 }));
    assert!(sparse_fibers(shape(3, 2), SizeGuard::default()).is_err());
}

fn arb_decomposition(m: usize, n: usize) -> impl Strategy<Value = (Gf3, Gf3, PeriodicField)> {
    (0i64..3, 0i64..3, proptest::collection::vec(0i64..3, m * n)).prop_map(move |(r, s, v)| {
        let h = PeriodicField::from_fn(shape(m, n), |i, j| {
            if (i, j) == (1, 1) {
                Gf3::ZERO
            } else {
                Gf3::new(v[(i - 1) * n + (j - 1)])
            }
        });
        (Gf3::new(r), Gf3::new(s), h)
    })
}

proptest! {
    #[test]
    fn decomposition_is_unique(
        (r, s, h) in prop_oneof![arb_decomposition(4, 2), arb_decomposition(2, 4), arb_decomposition(5, 4), arb_decomposition(7, 5)]
    ) {
        let w = &ToroidalOneForm::constant(h.shape(), r, s) + &toroidal_derivatives(&h);
        prop_assert!(is_closed_toroidal(&w));
        let d = decompose(&w).unwrap();
        prop_assert_eq!((d.r, d.s, &d.h), (r, s, &h));
    }

    #[test]
    fn periodic_lookup(i in -20i64..20, j in -20i64..20, v in proptest::collection::vec(0i64..3, 8)) {
        let h = PeriodicField::from_fn(shape(4, 2), |a, b| Gf3::new(v[(a - 1) * 2 + (b - 1)]));
        prop_assert_eq!(h.get(i, j), h.get(i + 4, j));
        prop_assert_eq!(h.get(i, j), h.get(i, j - 2));
        prop_assert!((1..=4).contains(&index_reduce(i, 4)));
    }
}
