use latticeforms::algebra::FieldTag;
use latticeforms::fixtures;
use latticeforms::grid::{BoundarySpec, GridShape, LatticeState};
use latticeforms::Error;
use proptest::prelude::*;

fn arb_state() -> impl Strategy<Value = LatticeState> {
    (2usize..=5, 2usize..=5, prop_oneof![Just(FieldTag::F2), Just(FieldTag::F3)]).prop_flat_map(|(m, n, field)| {
        let shape = GridShape::new(m, n).unwrap();
        proptest::collection::vec(0u8..field.characteristic(), shape.edge_count())
            .prop_map(move |labels| LatticeState::from_edges(shape, field, &labels).unwrap())
    })
}

proptest! {
    #[test]
    fn state_json_round_trip(s in arb_state()) {
        let text = s.serialize();
        prop_assert_eq!(LatticeState::deserialize(&text).unwrap(), s);
    }

    #[test]
    fn edge_vector_round_trip(s in arb_state()) {
        let back = LatticeState::from_edges(s.shape(), s.field(), &s.edges()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn boundary_of_matches(s in arb_state()) {
        prop_assert!(s.boundary_of().matches(&s));
    }

    #[test]
    fn boundary_json_round_trip(m in 2usize..5, n in 2usize..5, bits in any::<u64>()) {
        let shape = GridShape::new(m, n).unwrap();
        let b = BoundarySpec::from_bits(shape, bits & ((1u64 << shape.boundary_edge_count()) - 1));
        prop_assert_eq!(BoundarySpec::deserialize(&b.serialize()).unwrap(), b);
    }
}

#[test]
fn edge_counts() {
    let s = GridShape::new(5, 3).unwrap();
    assert_eq!((s.f_count(), s.g_count(), s.edge_count(), s.vertex_count()), (20, 18, 38, 15));
    assert_eq!(s.boundary_edge_count(), 16);
    assert_eq!(s.interior_edges().len(), 22);
    assert!(GridShape::new(1, 3).is_err());
}

#[test]
fn vertex_edges_order() {
    let s = GridShape::new(2, 2).unwrap();
    // left g[1][1], top f[1][2], right g[2][1], bottom f[1][1]
    assert_eq!(s.vertex_edges(1, 1), [s.g_index(1, 1), s.f_index(1, 2), s.g_index(2, 1), s.f_index(1, 1)]);
    assert_eq!(s.vertex_edges(1, 1), [6, 1, 8, 0]);
}

#[test]
fn fixtures_load() {
    let f1 = fixtures::rect_5x3();
    assert_eq!((f1.shape().m(), f1.shape().n(), f1.field()), (5, 3, FieldTag::F3));
    let e = f1.edges_at_vertex(5, 3).unwrap();
    assert_eq!((e.left, e.top, e.right, e.bottom), (0, 1, 1, 0));
    assert!(f1.edges_at_vertex(6, 1).is_err());
    assert_eq!(LatticeState::deserialize(fixtures::RECT_5X3_JSON).unwrap(), f1);
    let f3 = fixtures::torus_5x3();
    assert_eq!((f3.shape().m(), f3.shape().n()), (5, 3));
}

#[test]
fn malformed_json_is_rejected() {
    assert!(matches!(LatticeState::deserialize("{"), Err(Error::Parse { .. })));
    let bad_value = r#"{"m":2,"n":2,"field":"F2","f":[[0,0,2],[0,0,0]],"g":[[0,0],[0,0],[0,0]]}"#;
    match LatticeState::deserialize(bad_value) {
        Err(Error::Format { field, .. }) => assert_eq!(field, "f[0][2]"),
        other => panic!("unexpected {other:?}"),
    }
    let short_row = r#"{"m":2,"n":2,"field":"F3","f":[[0,0],[0,0,0]],"g":[[0,0],[0,0],[0,0]]}"#;
    assert!(matches!(LatticeState::deserialize(short_row), Err(Error::Format { .. })));
    let extra = r#"{"m":2,"n":2,"field":"F3","f":[[0,0,0],[0,0,0]],"g":[[0,0],[0,0],[0,0]],"x":1}"#;
    assert!(LatticeState::deserialize(extra).is_err());
}
