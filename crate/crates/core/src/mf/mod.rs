//! Graded matrix factorizations of the one-variable potential `x^n`.
//!
//! Grading: `deg x = 1`, so the potential has weight `n` and the shift
//! satisfies `[2] = twist(n)`. The grading twist by one is the translate
//! functor `tau~`.

mod complex;

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use serde::Serialize;

pub use complex::{ChainMap, Factorization, HomSpace};

use crate::table::DegreeTable;
use crate::{Error, Result};

/// The rank-one factorization `(x^a, x^(n-a))` with grading offset `s`,
/// shifted `shift` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradedMF {
    pub n: i64,
    pub a: i64,
    pub s: i64,
    pub shift: i64,
}

/// Canonical representative of an isomorphism class: even shift and
/// offset in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalForm {
    pub a: i64,
    pub s: i64,
    pub shift: i64,
}

pub fn mf_make(n: i64, a: i64, s: i64) -> Result<GradedMF> {
    if n < 2 {
        return Err(Error::ExponentTooSmall(n));
    }
    if a < 1 || a > n - 1 {
        return Err(Error::SplitOutOfRange { n, a });
    }
    Ok(GradedMF { n, a, s, shift: 0 })
}

/// The object `E`: `x^n = x * x^(n-1)` with no offset.
pub fn projective_simple(n: i64) -> Result<GradedMF> {
    mf_make(n, 1, 0)
}

pub fn mf_twist(m: GradedMF, k: i64) -> GradedMF {
    GradedMF { s: m.s + k, ..m }
}

pub fn mf_shift(m: GradedMF, j: i64) -> GradedMF {
    GradedMF { shift: m.shift + j, ..m }
}

impl GradedMF {
    pub fn parity(&self) -> i64 {
        self.shift.rem_euclid(2)
    }

    /// `(x^a, x^(n-a))[1]` is `(x^(n-a), x^a)` twisted by `a`; `[2]` is
    /// twist by `n`.
    pub fn normal_form(&self) -> NormalForm {
        let (mut a, mut s, mut shift) = (self.a, self.s, self.shift);
        if shift.rem_euclid(2) == 1 {
            s += a;
            a = self.n - a;
            shift -= 1;
        }
        shift += 2 * s.div_euclid(self.n);
        s = s.rem_euclid(self.n);
        NormalForm { a, s, shift }
    }

    pub fn is_isomorphic(&self, other: &GradedMF) -> bool {
        self.n == other.n && self.normal_form() == other.normal_form()
    }

    pub fn realize(&self) -> Factorization {
        Factorization::rank_one(self.n, self.a, 0).twist(self.s).shift(self.shift)
    }
}

/// Half-width of the degree window scanned around the expected support;
/// the outer `WINDOW_GUARD` degrees on each side must come out empty.
const WINDOW_HALF: i64 = 5;
const WINDOW_GUARD: i64 = 2;

/// Graded Hom table of the homotopy category, `d -> dim Hom^0(M, N[d])`,
/// with the internal weight channel filled in.
pub fn mf_hom_table(m: &GradedMF, n: &GradedMF) -> Result<DegreeTable> {
    if m.n != n.n {
        return Err(Error::PotentialMismatch { left: m.n, right: n.n });
    }
    Ok(hom_table_of(&m.realize(), &n.realize()))
}

/// Hom table between arbitrary factorizations over the same potential.
pub fn hom_table_of(source: &Factorization, target: &Factorization) -> DegreeTable {
    let n = source.n();
    // Hom^d is concentrated near 2 * (offset difference) / n
    let lo = |f: &Factorization| f.even.iter().chain(&f.odd).copied().min().unwrap_or(0);
    let center = (2 * (lo(source) - lo(target))).div_euclid(n);
    let mut table = DegreeTable::new();
    for d in center - WINDOW_HALF..=center + WINDOW_HALF {
        let h = HomSpace::compute(source, &target.shift(d));
        if (d - center).abs() > WINDOW_HALF - WINDOW_GUARD {
            assert_eq!(h.dim(), 0, "Hom window too narrow at degree {d}");
            continue;
        }
        for w in h.weights() {
            table.add_weighted(d, w, 1);
        }
    }
    table
}

/// Per-factor translate table `T(delta, d) = dim Hom^d(E, twist(delta) E)`
/// on the window `delta in (-n, 0]`, with the wrap law derived from the
/// computed tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslateTable {
    pub n: i64,
    pub base: BTreeMap<i64, DegreeTable>,
    /// `T(delta + n) = T(delta).shifted(wrap_shift)`
    pub wrap_shift: i64,
}

impl TranslateTable {
    /// Reduces `delta` into the window and applies the wrap law.
    pub fn get(&self, delta: i64) -> DegreeTable {
        let k = (delta + self.n - 1).div_euclid(self.n);
        let r = delta - k * self.n;
        self.base[&r].shifted(k * self.wrap_shift)
    }

    /// Nonzero `(delta, d, dim)` entries of the window.
    pub fn support(&self) -> Vec<(i64, i64, u64)> {
        self.base.iter().flat_map(|(&delta, t)| t.iter().map(move |(d, m)| (delta, d, m))).collect()
    }

    /// Whether `T(delta + n, d) = T(delta, d + step)` holds for every
    /// window offset, checked against freshly computed tables.
    pub fn wrap_holds(&self, step: i64) -> bool {
        let e = Factorization::rank_one(self.n, 1, 0);
        self.base.iter().all(|(&delta, t)| hom_table_of(&e, &e.twist(delta + self.n)) == t.shifted(-step))
    }
}

pub fn per_factor_table(n: i64) -> Result<TranslateTable> {
    let e = projective_simple(n)?.realize();
    let base: BTreeMap<i64, DegreeTable> = (-n + 1..=0).map(|delta| (delta, hom_table_of(&e, &e.twist(delta)).dims())).collect();
    let wrapped: BTreeMap<i64, DegreeTable> = base.keys().map(|&delta| (delta, hom_table_of(&e, &e.twist(delta + n)).dims())).collect();

    let (&d0, t0) = base.iter().find(|(_, t)| !t.is_empty()).ok_or_else(|| Error::Degenerate("empty translate table".into()))?;
    let wrap_shift = wrapped[&d0].min_degree().unwrap_or(0) - t0.min_degree().unwrap_or(0);
    if base.iter().any(|(delta, t)| t.shifted(wrap_shift) != wrapped[delta]) {
        return Err(Error::Degenerate("translate table has no uniform wrap shift".into()));
    }
    Ok(TranslateTable { n, base, wrap_shift })
}

/// Outcome of checking `twist^k ~ [j]` on all indecomposables of a window.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodicityReport {
    pub n: i64,
    pub twist: i64,
    pub shift: i64,
    pub objects_checked: usize,
    pub violations: Vec<String>,
}

impl PeriodicityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `tau~^n M ~ M[2]` on every indecomposable `(a, s)` with
/// `s in [0, n)` and both shift parities.
pub fn verify_periodicity(n: i64) -> Result<PeriodicityReport> {
    check_twist_against_shift(n, n, 2)
}

/// Checks `twist^k M ~ M[j]` by normal forms and by Hom tables against
/// every unshifted test object.
pub fn check_twist_against_shift(n: i64, k: i64, j: i64) -> Result<PeriodicityReport> {
    let mut objects = Vec::new();
    for a in 1..n {
        for s in 0..n {
            objects.push(mf_make(n, a, s)?);
        }
    }
    let probes: Vec<Factorization> = objects.iter().map(GradedMF::realize).collect();
    let mut report = PeriodicityReport { n, twist: k, shift: j, objects_checked: 0, violations: Vec::new() };
    for parity in 0..2 {
        for m in &objects {
            let m = mf_shift(*m, parity);
            let twisted = mf_twist(m, k);
            let shifted = mf_shift(m, j);
            report.objects_checked += 1;
            if twisted.normal_form() != shifted.normal_form() {
                report.violations.push(format!("normal forms differ for {m:?}"));
                continue;
            }
            let (tw, sh) = (twisted.realize(), shifted.realize());
            for (probe, label) in probes.iter().zip(&objects) {
                if hom_table_of(&tw, probe) != hom_table_of(&sh, probe) || hom_table_of(probe, &tw) != hom_table_of(probe, &sh) {
                    report.violations.push(format!("Hom tables differ for {m:?} against {label:?}"));
                }
            }
        }
    }
    Ok(report)
}

/// Reading of the backward translate `tau^(-mu) E` as a grading twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TranslateConvention {
    /// `tau^(-mu) E = twist(mu) E`, the reading of the per-factor table
    PerFactor,
    /// `tau^(-mu) E = twist(-mu) E`, i.e. `tau = tau~`
    Gepner,
}

impl TranslateConvention {
    fn translate(self, e: GradedMF, mu: i64) -> GradedMF {
        match self {
            TranslateConvention::PerFactor => mf_twist(e, mu),
            TranslateConvention::Gepner => mf_twist(e, -mu),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub convention: TranslateConvention,
    pub holds: bool,
}

/// The connected-sum statements about `C = tau^(1-n) E`: nonzero maps
/// `C[1] -> E` and `tau^(2-n) E -> C[1]`, and no morphisms in any degree
/// between `C` and `tau^(-mu) E` for `0 < mu < n-2`. Evaluated in both
/// translate conventions.
pub fn connected_sum_claims(n: i64) -> Result<Vec<ClaimCheck>> {
    let e = projective_simple(n)?;
    let mut out = Vec::new();
    for conv in [TranslateConvention::PerFactor, TranslateConvention::Gepner] {
        let c1 = mf_shift(conv.translate(e, n - 1), 1);
        let before = conv.translate(e, n - 2);
        out.push(ClaimCheck { claim: "Hom^0(C[1], E) != 0".into(), convention: conv, holds: mf_hom_table(&c1, &e)?.get(0) > 0 });
        out.push(ClaimCheck { claim: "Hom^0(tau^(2-n) E, C[1]) != 0".into(), convention: conv, holds: mf_hom_table(&before, &c1)?.get(0) > 0 });
        let mut trivial = true;
        for mu in 1..n - 2 {
            let t = conv.translate(e, mu);
            trivial &= mf_hom_table(&t, &c1)?.is_empty() && mf_hom_table(&c1, &t)?.is_empty();
        }
        out.push(ClaimCheck { claim: "Hom^*(C, tau^(-mu) E) = 0 for 0 < mu < n-2".into(), convention: conv, holds: trivial });
    }
    Ok(out)
}

/// Memo of Hom tables keyed by normal forms. Population is idempotent, so
/// racing writers store equal values.
#[derive(Default)]
pub struct HomCache {
    tables: RwLock<HashMap<(i64, NormalForm, NormalForm), DegreeTable>>,
}

impl HomCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, m: &GradedMF, n: &GradedMF) -> Result<DegreeTable> {
        let key = (m.n, m.normal_form(), n.normal_form());
        if let Some(t) = self.tables.read().expect("cache lock poisoned").get(&key) {
            return Ok(t.clone());
        }
        let t = mf_hom_table(m, n)?;
        self.tables.write().expect("cache lock poisoned").insert(key, t.clone());
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.tables.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
