use std::time::Instant;

use hms_core::orbifold::*;
use num_bigint::BigInt;

#[test]
fn class_counts_sum_to_group_order() {
    for n in 2..=25usize {
        let d = sector_decomposition(n).unwrap();
        assert_eq!(d.total_classes(), BigInt::from(n).pow(n as u32 - 1), "n={n}");
    }
}

#[test]
fn euler_characteristic_is_milnor_number() {
    let start = Instant::now();
    for n in 2..=12 {
        let e = euler_char(n).unwrap();
        assert!(e.matches, "n={n}");
    }
    assert!(start.elapsed().as_secs_f64() < 5.0);
    assert_eq!(euler_char(10).unwrap().value, BigInt::from(3486784401u64));
}

#[test]
fn degree_and_positivity() {
    for n in 2..=14usize {
        let p = poincare(n).unwrap();
        // the full block contributes P^(n-2)
        assert_eq!(p.degree(), Some(n - 2), "n={n}");
        assert!(has_positive_coefficients(&p), "n={n}");
        for s in sector_decomposition(n).unwrap().sectors {
            assert!(s.contribution.is_zero() || has_positive_coefficients(&s.contribution));
        }
    }
}

#[test]
fn literal_formula_only_matches_at_two() {
    assert!(compare_literal(2).unwrap().matches);
    for n in 3..=6 {
        assert!(!compare_literal(n).unwrap().matches, "n={n}");
    }
}

#[test]
fn agrees_with_element_enumeration() {
    for n in 2..=6usize {
        let mut total = hms_core::exact::Poly::zero();
        let count = n.pow(n as u32 - 1);
        for code in 0..count {
            // first coordinate fixed to zero picks a diagonal representative
            let mut values = vec![0usize; n];
            for (i, v) in values.iter_mut().enumerate().skip(1) {
                *v = (code / n.pow(i as u32 - 1)) % n;
            }
            let mut sizes = vec![0usize; n];
            for v in values {
                sizes[v] += 1;
            }
            let blocks: Vec<usize> = sizes.into_iter().filter(|&b| b > 0).collect();
            total = &total + &block_contribution(&blocks);
        }
        assert_eq!(total, poincare(n).unwrap(), "n={n}");
    }
}
