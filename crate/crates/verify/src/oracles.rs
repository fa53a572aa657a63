//! Reference computations that do not go through the matrix-factorization
//! or orbit machinery: sheaf cohomology on projective space and direct
//! enumeration.

use hms_core::exact::Poly;
use hms_core::mf::TranslateTable;
use hms_core::orbit::tensor_hom;
use hms_core::DegreeTable;

/// Combinatorial binomial, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// `h^q(P^dim, Omega^p(k))` by Bott's formula.
pub fn bott(dim: i64, p: i64, k: i64, q: i64) -> u64 {
    if p < 0 || p > dim {
        return 0;
    }
    if q == 0 && k > p {
        return binom(k + dim - p, k) * binom(k - 1, p);
    }
    if q == dim && k < p - dim {
        return binom(-k + p, -k) * binom(-k - 1, dim - p);
    }
    if q == p && k == 0 {
        return 1;
    }
    0
}

/// `H^*(X, Omega^p_P(k)|_X)` for the degree-`n` hypersurface `X` in
/// `P^(n-1)`, from `0 -> Omega^p(k-n) -> Omega^p(k) -> Omega^p(k)|_X -> 0`.
/// `None` when some degree has cohomology on both ends, since the long
/// exact sequence alone does not then determine the answer.
pub fn restricted(n: i64, p: i64, k: i64) -> Option<DegreeTable> {
    let dim = n - 1;
    let source = |q: i64| bott(dim, p, k - n, q);
    let target = |q: i64| bott(dim, p, k, q);
    if (0..=dim).any(|q| source(q) > 0 && target(q) > 0) {
        return None;
    }
    Some(DegreeTable::from_pairs((0..dim).map(|q| (q, target(q) + source(q + 1)))))
}

/// `Hom^*(tau~^(-delta) O_X, O_X)` for `-n < delta < n`, using the sheaf
/// model `tau~^(-mu) O = Omega^(n-1-mu)(n-mu)[-mu]|_X`.
///
/// For `delta >= 0` the dual of `Omega^(n-1-delta)(n-delta)` is
/// `Omega^delta(delta)`, so `Hom^d = H^(d+delta)(Omega^delta(delta)|_X)`.
/// For `delta = -m < 0`, `Hom^d(O, tau~^(-m) O) = H^(d-m)(Omega^(n-1-m)(n-m)|_X)`.
pub fn sheaf_hom(n: i64, delta: i64) -> Option<DegreeTable> {
    if delta >= 0 {
        Some(restricted(n, delta, delta)?.shifted(-delta))
    } else {
        let m = -delta;
        Some(restricted(n, n - 1 - m, n - m)?.shifted(m))
    }
}

/// `chi(O_X(k)) = chi(O_P(k)) - chi(O_P(k-n))` with
/// `chi(O_P(j)) = (j+1)...(j+n-1)/(n-1)!`, valid for every integer `j`.
pub fn hrr_chi(n: i64, k: i64) -> i64 {
    let chi_p = |j: i64| -> i128 {
        let num: i128 = (1..n).map(|i| (j + i) as i128).product();
        let den: i128 = (1..n).map(|i| i as i128).product();
        num / den
    };
    (chi_p(k) - chi_p(k - n)) as i64
}

/// Poincare polynomial summed over all `n^(n-1)` group elements with first
/// coordinate zero.
pub fn orbifold_brute_force(n: usize) -> Poly {
    let mut total = Poly::zero();
    for code in 0..n.pow(n as u32 - 1) {
        let mut sizes = vec![0usize; n];
        sizes[0] += 1;
        let mut rest = code;
        for _ in 1..n {
            sizes[rest % n] += 1;
            rest /= n;
        }
        for &b in sizes.iter().filter(|&&b| b >= 2) {
            total = &total + &Poly::projective_space(b - 2);
        }
    }
    total
}

/// Orbit tables by looping over all `n^n` representative tuples.
pub fn orbit_brute_force(t: &TranslateTable) -> Vec<DegreeTable> {
    let n = t.n;
    let zero = vec![0; n as usize];
    let mut out = vec![DegreeTable::new(); n as usize];
    for code in 0..n.pow(n as u32) {
        let mut rest = code;
        let mut dst = Vec::with_capacity(n as usize);
        for _ in 0..n {
            dst.push(-(rest % n));
            rest /= n;
        }
        let sigma: i64 = -dst.iter().sum::<i64>();
        let table = tensor_hom(t, &zero, &dst).expect("equal lengths").shifted(2 * sigma.div_euclid(n));
        out[sigma.rem_euclid(n) as usize].merge(&table);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bott_values() {
        // h^0(P^2, O(1)) = 3, h^2(P^2, O(-3)) = 1, h^1(P^2, Omega^1) = 1
        assert_eq!(bott(2, 0, 1, 0), 3);
        assert_eq!(bott(2, 0, -3, 2), 1);
        assert_eq!(bott(2, 1, 0, 1), 1);
        // Euler sequence: h^0(P^2, Omega^1(2)) = 3
        assert_eq!(bott(2, 1, 2, 0), 3);
        assert_eq!(bott(4, 1, -4, 4), 5);
    }

    #[test]
    fn structure_sheaf_tables() {
        assert_eq!(sheaf_hom(3, 0).unwrap(), DegreeTable::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(sheaf_hom(4, 0).unwrap(), DegreeTable::from_pairs([(0, 1), (2, 1)]));
        assert_eq!(sheaf_hom(5, 0).unwrap(), DegreeTable::from_pairs([(0, 1), (3, 1)]));
    }

    #[test]
    fn quintic_first_translate() {
        assert_eq!(sheaf_hom(5, 1).unwrap(), DegreeTable::from_pairs([(2, 5)]));
        assert_eq!(sheaf_hom(3, 1).unwrap(), DegreeTable::from_pairs([(0, 3)]));
        assert_eq!(sheaf_hom(3, -1).unwrap(), DegreeTable::from_pairs([(1, 3)]));
    }

    #[test]
    fn hilbert_chi() {
        assert_eq!(hrr_chi(5, 1), 5);
        assert_eq!(hrr_chi(5, 0), 0);
        assert_eq!(hrr_chi(4, 0), 2);
        assert_eq!(hrr_chi(3, 2), 6);
    }

    #[test]
    fn orbifold_small_cases() {
        assert_eq!(orbifold_brute_force(3).to_string(), "q+7");
        assert_eq!(orbifold_brute_force(2).to_string(), "1");
    }
}
