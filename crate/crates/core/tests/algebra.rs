use latticeforms::algebra::{format_rational, parse_rational, ratio, Field, Gf2, Gf3, Matrix};
use num_rational::BigRational;
use proptest::prelude::*;

fn gf3_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<Gf3>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(0i64..3, r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(Gf3::new).collect()).unwrap())
    })
}

fn gf2_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<Gf2>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(0i64..2, r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(Gf2::new).collect()).unwrap())
    })
}

fn q_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<BigRational>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-4i64..=4, 1i64..=3), r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(|(p, q)| ratio(p, q)).collect()).unwrap())
    })
}

fn check_row_reduction<K: Field + std::fmt::Display>(m: &Matrix<K>) -> Result<(), TestCaseError> {
    let (r, pivots) = m.rref_with_pivots();
    prop_assert_eq!(&r.rref(), &r);
    prop_assert!(pivots.len() <= m.rows().min(m.cols()));
    prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
    for (row, &p) in pivots.iter().enumerate() {
        prop_assert_eq!(r.get(row, p), &K::one());
        for other in 0..r.rows() {
            if other != row {
                prop_assert!(r.get(other, p).is_zero());
            }
        }
    }
    let basis = m.nullspace_basis();
    prop_assert_eq!(basis.len() + m.rank(), m.cols());
    for v in &basis {
        prop_assert!(m.mul_vec(v).unwrap().iter().all(K::is_zero));
    }
    prop_assert_eq!(m.transpose().rank(), m.rank());
    Ok(())
}

proptest! {
    #[test]
    fn gf3_row_reduction(m in gf3_matrix(6, 7)) {
        check_row_reduction(&m)?;
    }

    #[test]
    fn gf2_row_reduction(m in gf2_matrix(6, 9)) {
        check_row_reduction(&m)?;
    }

    #[test]
    fn rational_row_reduction(m in q_matrix(4, 5)) {
        check_row_reduction(&m)?;
    }

    #[test]
    fn matmul_associates(a in gf3_matrix(3, 3), seed in 0i64..1000) {
        let b = Matrix::<Gf3>::from_vec(a.cols(), 2, (0..2 * a.cols() as i64).map(|k| Gf3::new(k * seed + 1)).collect()).unwrap();
        let c = Matrix::<Gf3>::from_vec(2, 3, (0..6).map(|k| Gf3::new(k + seed)).collect()).unwrap();
        prop_assert_eq!(a.matmul(&b).unwrap().matmul(&c).unwrap(), a.matmul(&b.matmul(&c).unwrap()).unwrap());
    }

    #[test]
    fn rational_strings_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let x = ratio(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn gf3_field_axioms(a in 0i64..3, b in 0i64..3, c in 0i64..3) {
        let (a, b, c) = (Gf3::new(a), Gf3::new(b), Gf3::new(c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, Gf3::ZERO);
        if a != Gf3::ZERO {
            prop_assert_eq!(a * a.inv().unwrap(), Gf3::ONE);
        }
    }
}

#[test]
fn field_sizes() {
    assert_eq!(Gf2::elements().count(), 2);
    assert_eq!(Gf3::elements().count(), 3);
    assert!(Gf3::elements().filter(|x| *x != Gf3::ZERO).all(|x| (x * x) == Gf3::ONE));
}
