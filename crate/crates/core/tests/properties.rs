use hms_core::exact::{BiSeries, HalfSeries, Q};
use hms_core::mf::{hom_table_of, mf_hom_table, mf_make, mf_shift, mf_twist};
use hms_core::DegreeTable;
use proptest::prelude::*;

const TRUNC: usize = 10;

fn series() -> impl Strategy<Value = HalfSeries> {
    prop::collection::vec(-5i64..=5, 0..=TRUNC + 3).prop_map(|c| HalfSeries::from_ints(&c, TRUNC))
}

/// Series with constant term one in x, each slot a random w-series.
fn unit_biseries() -> impl Strategy<Value = BiSeries> {
    prop::collection::vec(series(), 3).prop_map(|mut slots| {
        slots[0] = HalfSeries::one(TRUNC);
        BiSeries::from_slots(slots)
    })
}

fn table() -> impl Strategy<Value = DegreeTable> {
    prop::collection::vec((-4i64..4, 0u64..4), 0..5).prop_map(DegreeTable::from_pairs)
}

proptest! {
    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn exp_inverts_log(f in unit_biseries()) {
        prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn log_is_additive(f in unit_biseries(), g in unit_biseries()) {
        let lhs = (&f * &g).log().unwrap();
        let rhs = &f.log().unwrap() + &g.log().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scaling_distributes(a in series(), n in -7i64..7) {
        let c = Q::from_integer(n.into());
        prop_assert_eq!(a.scale(&c), &a * &HalfSeries::monomial(0, c.clone(), TRUNC));
    }

    #[test]
    fn convolution_is_commutative_and_preserves_euler(a in table(), b in table()) {
        prop_assert_eq!(a.convolve(&b), b.convolve(&a));
        prop_assert_eq!(a.convolve(&b).euler(), a.euler() * b.euler());
        prop_assert_eq!(a.convolve(&b).total(), a.total() * b.total());
    }

    #[test]
    fn hom_tables_twist_invariant(n in 2i64..6, a in 1i64..6, b in 1i64..6, s in -6i64..6, t in -6i64..6, k in -7i64..7) {
        prop_assume!(a < n && b < n);
        let m = mf_make(n, a, s).unwrap();
        let p = mf_make(n, b, t).unwrap();
        let base = mf_hom_table(&m, &p).unwrap();
        prop_assert_eq!(mf_hom_table(&mf_twist(m, k), &mf_twist(p, k)).unwrap(), base.clone());
        prop_assert!(base.weights_consistent());
    }

    #[test]
    fn isomorphic_objects_have_equal_tables(n in 2i64..6, a in 1i64..6, s in -8i64..8, j in -3i64..4) {
        prop_assume!(a < n);
        let m = mf_shift(mf_make(n, a, s).unwrap(), j);
        let nf = m.normal_form();
        let canon = mf_shift(mf_make(n, nf.a, nf.s).unwrap(), nf.shift);
        prop_assert!(m.is_isomorphic(&canon));
        let probe = mf_make(n, 1, 0).unwrap().realize();
        prop_assert_eq!(hom_table_of(&m.realize(), &probe), hom_table_of(&canon.realize(), &probe));
        prop_assert_eq!(hom_table_of(&probe, &m.realize()), hom_table_of(&probe, &canon.realize()));
    }
}
