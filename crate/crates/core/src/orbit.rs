//! Kunneth products of the per-factor translate table and the orbit
//! category of the tensor power.
//!
//! Objects of the orbit category are residues `s mod n`, standing for
//! `tau~^(-s) O`. The table for offset `delta` is `Hom(tau~^(-delta) O, O)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::exact::{linalg, q_int, Q};
use crate::mf::{per_factor_table, TranslateTable};
use crate::table::DegreeTable;
use crate::{Error, Result};

/// Kunneth product of per-factor tables at offsets `src_i - dst_i`.
pub fn tensor_hom(t: &TranslateTable, src: &[i64], dst: &[i64]) -> Result<DegreeTable> {
    if src.len() != dst.len() {
        return Err(Error::InvalidArgument(format!("tuple lengths {} and {} differ", src.len(), dst.len())));
    }
    Ok(src.iter().zip(dst).fold(DegreeTable::from_pairs([(0, 1)]), |acc, (a, b)| acc.convolve(&t.get(a - b))))
}

/// Hom tables of the orbit category, one per offset class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitHomTable {
    pub n: i64,
    pub by_offset: Vec<DegreeTable>,
}

impl OrbitHomTable {
    pub fn offset(&self, delta: i64) -> &DegreeTable {
        &self.by_offset[delta.rem_euclid(self.n) as usize]
    }

    /// `Hom(tau~^(-s) O, tau~^(-s') O)`.
    pub fn hom(&self, s: i64, s_prime: i64) -> &DegreeTable {
        self.offset(s - s_prime)
    }

    /// `Hom(tau~^(-delta) O, O)` for an integer `delta`, using
    /// `tau~^(-n) = [-2]`.
    pub fn lifted(&self, delta: i64) -> DegreeTable {
        let k = delta.div_euclid(self.n);
        self.offset(delta).shifted(-2 * k)
    }
}

/// Raw orbit sums over representatives `delta_i in [lo, lo+len)`, before
/// any multiplicity normalization.
///
/// Each factor contributes `T(delta_i)`; the tuple sum `sigma = Delta + n k`
/// places its product at degree `raw + 2k`. The sum over tuples is a
/// convolution power tracking the exact `sigma`.
pub fn orbit_sums(t: &TranslateTable, lo: i64, len: i64) -> Vec<DegreeTable> {
    let n = t.n;
    let factor: Vec<(i64, DegreeTable)> = (lo..lo + len).map(|delta| (delta, t.get(delta))).filter(|(_, t)| !t.is_empty()).collect();
    // (sigma, degree) -> count
    let mut acc: BTreeMap<(i64, i64), u64> = BTreeMap::from([((0, 0), 1)]);
    for _ in 0..n {
        let mut next: BTreeMap<(i64, i64), u64> = BTreeMap::new();
        for (&(sigma, d), &m) in &acc {
            for (delta, table) in &factor {
                for (e, k) in table.iter() {
                    *next.entry((sigma + delta, d + e)).or_insert(0) += m.checked_mul(k).expect("count overflow");
                }
            }
        }
        acc = next;
    }
    let mut out = vec![DegreeTable::new(); n as usize];
    for ((sigma, d), m) in acc {
        let delta = sigma.rem_euclid(n);
        let k = sigma.div_euclid(n);
        out[delta as usize].add(d + 2 * k, m);
    }
    out
}

pub fn orbit_hom_table(n: i64) -> Result<OrbitHomTable> {
    let t = per_factor_table(n)?;
    Ok(OrbitHomTable { n, by_offset: orbit_sums(&t, 0, n) })
}

/// Orbit tables from the window `[0, 2n)^n`, divided by the `2^n`
/// multiplicity with which it covers each orbit class.
pub fn orbit_hom_table_doubled(n: i64) -> Result<OrbitHomTable> {
    let t = per_factor_table(n)?;
    let mult = 1u64 << n;
    let by_offset = orbit_sums(&t, 0, 2 * n)
        .into_iter()
        .map(|table| {
            if table.iter().any(|(_, m)| m % mult != 0) {
                return Err(Error::Degenerate("doubled window count not divisible by its multiplicity".into()));
            }
            Ok(DegreeTable::from_pairs(table.iter().map(|(d, m)| (d, m / mult))))
        })
        .collect::<Result<_>>()?;
    Ok(OrbitHomTable { n, by_offset })
}

/// Orbit tables from the shifted window `[lo, lo+n)^n`.
pub fn orbit_hom_table_shifted(n: i64, lo: i64) -> Result<OrbitHomTable> {
    let t = per_factor_table(n)?;
    Ok(OrbitHomTable { n, by_offset: orbit_sums(&t, lo, n) })
}

/// Euler pairing of `tau~^(-s) O` with `tau~^(-s') O`, read off the table
/// of offset `s' - s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerPairing {
    pub raw: i64,
    /// `raw * (-1)^(s'-s)`, the pairing of the shifted objects `[s]`, `[s']`
    pub normalized: i64,
}

pub fn euler_pairing(table: &OrbitHomTable, s: i64, s_prime: i64) -> EulerPairing {
    let raw = table.offset(s_prime - s).euler();
    let sign = if (s_prime - s).rem_euclid(2) == 0 { 1 } else { -1 };
    EulerPairing { raw, normalized: sign * raw }
}

/// `(chi(Delta))` for `Delta = 0..n-1`.
pub fn gram_circulant(table: &OrbitHomTable) -> Vec<i64> {
    (0..table.n).map(|delta| euler_pairing(table, 0, delta).raw).collect()
}

/// Euler matrix of the translates `tau^(-mu) E`, `mu = 0..n-1`, of one
/// factor.
pub fn factor_euler_matrix(t: &TranslateTable) -> Vec<Vec<Q>> {
    (0..t.n).map(|mu| (0..t.n).map(|nu| q_int(t.get(mu - nu).euler())).collect()).collect()
}

/// Rank of the numerical lattice of the tensor power, as the product of
/// per-factor ranks (rank is multiplicative under Kronecker products).
pub fn k_rank(n: i64) -> Result<BigInt> {
    let t = per_factor_table(n)?;
    let r = linalg::rank(&factor_euler_matrix(&t));
    Ok((0..n).fold(BigInt::one(), |acc, _| acc * BigInt::from(r)))
}

/// Rank of the explicit `n`-fold Kronecker power of the per-factor Euler
/// matrix. Size `n^n`, so only for small `n`.
pub fn k_rank_explicit(n: i64) -> Result<usize> {
    let t = per_factor_table(n)?;
    let m = factor_euler_matrix(&t);
    let mut acc: Vec<Vec<Q>> = vec![vec![Q::one()]];
    for _ in 0..n {
        let size = acc.len() * m.len();
        let mut next = vec![vec![Q::from_integer(0.into()); size]; size];
        for (i, row) in acc.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                for (k, mrow) in m.iter().enumerate() {
                    for (l, b) in mrow.iter().enumerate() {
                        next[i * m.len() + k][j * m.len() + l] = a * b;
                    }
                }
            }
        }
        acc = next;
    }
    Ok(linalg::rank(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_tables() {
        let t = orbit_hom_table(3).unwrap();
        assert_eq!(t.offset(0), &DegreeTable::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(t.offset(1), &DegreeTable::from_pairs([(0, 3)]));
        assert_eq!(t.offset(2), &DegreeTable::from_pairs([(-1, 3)]));
    }

    #[test]
    fn tensor_hom_examples() {
        let t = per_factor_table(3).unwrap();
        assert_eq!(tensor_hom(&t, &[0, 0, 0], &[1, 1, 1]).unwrap(), DegreeTable::from_pairs([(3, 1)]));
        assert_eq!(tensor_hom(&t, &[0, 0, 0], &[1, 0, 0]).unwrap(), DegreeTable::from_pairs([(1, 1)]));
        assert_eq!(tensor_hom(&t, &[2, 5, 1], &[2, 5, 1]).unwrap(), DegreeTable::from_pairs([(0, 1)]));
        assert!(tensor_hom(&t, &[0], &[0, 1]).is_err());
    }

    #[test]
    fn lifted_wraps_by_two() {
        let t = orbit_hom_table(5).unwrap();
        assert_eq!(t.lifted(6), t.offset(1).shifted(-2));
        assert_eq!(t.lifted(-1), t.offset(4).shifted(2));
    }
}
