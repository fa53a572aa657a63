use hms_core::orbit::*;
use hms_core::DegreeTable;
use num_bigint::BigInt;

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn quintic_tables() {
    let t = orbit_hom_table(5).unwrap();
    let expected = [vec![(0, 1), (3, 1)], vec![(2, 5)], vec![(1, 10)], vec![(0, 10)], vec![(-1, 5)]];
    for (delta, e) in expected.iter().enumerate() {
        assert_eq!(t.offset(delta as i64), &DegreeTable::from_pairs(e.clone()), "delta={delta}");
    }
}

#[test]
fn gram_rows() {
    assert_eq!(gram_circulant(&orbit_hom_table(3).unwrap()), vec![0, 3, -3]);
    assert_eq!(gram_circulant(&orbit_hom_table(4).unwrap()), vec![2, -4, 6, -4]);
    assert_eq!(gram_circulant(&orbit_hom_table(5).unwrap()), vec![0, 5, -10, 10, -5]);
}

#[test]
fn gram_closed_form() {
    for n in 2..=9 {
        let row = gram_circulant(&orbit_hom_table(n).unwrap());
        assert_eq!(row[0], 1 + if n % 2 == 0 { 1 } else { -1 });
        for delta in 1..n {
            let sign = if (n - delta) % 2 == 0 { 1 } else { -1 };
            assert_eq!(row[delta as usize], sign * binom(n, delta), "n={n} delta={delta}");
        }
    }
}

#[test]
fn pairing_examples_and_normalization() {
    let t = orbit_hom_table(5).unwrap();
    assert_eq!(euler_pairing(&t, 0, 1).raw, 5);
    assert_eq!(euler_pairing(&t, 0, 1).normalized, -5);
    assert_eq!(euler_pairing(&t, 0, 2).raw, -10);
    assert_eq!(euler_pairing(&orbit_hom_table(3).unwrap(), 1, 1).raw, 0);
}

#[test]
fn cyclic_invariance() {
    let t = orbit_hom_table(4).unwrap();
    for s in 0..4 {
        for sp in 0..4 {
            assert_eq!(t.hom(s, sp), t.hom(s + 1, sp + 1));
        }
    }
}

#[test]
fn pairing_symmetry() {
    for n in 3..=6 {
        let row = gram_circulant(&orbit_hom_table(n).unwrap());
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for delta in 0..n {
            assert_eq!(row[delta as usize], sign * row[((n - delta) % n) as usize]);
        }
    }
}

#[test]
fn serre_duality_on_lifted_homs() {
    for n in 3..=6 {
        let t = orbit_hom_table(n).unwrap();
        for delta in 0..n {
            let forward = t.lifted(delta);
            let backward = t.lifted(-delta);
            for d in -3 * n..3 * n {
                assert_eq!(forward.get(d), backward.get(n - 2 - d), "n={n} delta={delta} d={d}");
            }
        }
    }
}

#[test]
fn representative_window_independence() {
    for n in 2..=6 {
        let base = orbit_hom_table(n).unwrap();
        assert_eq!(orbit_hom_table_doubled(n).unwrap(), base);
        for lo in [-n, -1, 1, 3] {
            assert_eq!(orbit_hom_table_shifted(n, lo).unwrap(), base, "n={n} lo={lo}");
        }
    }
}

#[test]
fn convolution_matches_tuple_enumeration() {
    for n in 2..=5i64 {
        let t = hms_core::mf::per_factor_table(n).unwrap();
        let mut brute = vec![DegreeTable::new(); n as usize];
        let zero = vec![0; n as usize];
        for code in 0..n.pow(n as u32) {
            let deltas: Vec<i64> = (0..n).map(|i| (code / n.pow(i as u32)) % n).collect();
            let dst: Vec<i64> = deltas.iter().map(|d| -d).collect();
            let sigma: i64 = deltas.iter().sum();
            let table = tensor_hom(&t, &zero, &dst).unwrap().shifted(2 * sigma.div_euclid(n));
            brute[sigma.rem_euclid(n) as usize].merge(&table);
        }
        assert_eq!(orbit_hom_table(n).unwrap().by_offset, brute, "n={n}");
    }
}

#[test]
fn k_lattice_rank() {
    for n in 2..=6 {
        assert_eq!(k_rank(n).unwrap(), BigInt::from(n - 1).pow(n as u32));
    }
    for n in 2..=4 {
        assert_eq!(k_rank_explicit(n).unwrap() as i64, (n - 1).pow(n as u32));
    }
}

#[test]
fn tables_scale_to_larger_n() {
    let t = orbit_hom_table(10).unwrap();
    assert_eq!(t.offset(0), &DegreeTable::from_pairs([(0, 1), (8, 1)]));
    assert_eq!(t.offset(3).total(), binom(10, 3) as u64);
}
