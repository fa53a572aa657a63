//! Stable collections for the two kinds of stability conditions on the
//! Fermat hypersurface `X` of degree `n` in `P^(n-1)`: the Gepner kind on
//! the translates `tau~^(-s) O`, and the large-radius kind on the line
//! bundles `O(mu)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::exact::{poly_binomial, Poly, Q};
use crate::orbit::{orbit_hom_table, OrbitHomTable};
use crate::table::DegreeTable;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Gepner,
    LargeRadius,
}

/// An object up to shift: `tau~^(-s) O` with `s in [0, n)`, or `O(mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    Translate(i64),
    LineBundle(i64),
}

impl Label {
    pub fn kind(&self) -> Kind {
        match self {
            Label::Translate(_) => Kind::Gepner,
            Label::LineBundle(_) => Kind::LargeRadius,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub label: Label,
    pub shift: i64,
    /// Gepner: phase in units of `2 pi`. Large radius: slope of the
    /// reduced Hilbert polynomial.
    #[serde(serialize_with = "as_string")]
    pub phase: Q,
}

fn as_string<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Label::Translate(0) => write!(f, "O")?,
            Label::Translate(s) => write!(f, "tau~^-{s} O")?,
            Label::LineBundle(0) => write!(f, "O")?,
            Label::LineBundle(mu) => write!(f, "O({mu})")?,
        }
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableCollection {
    pub n: i64,
    pub kind: Kind,
    /// highest first
    pub entries: Vec<Entry>,
}

/// Vertices with arrow multiplicities per `(source, target, degree)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedQuiver {
    pub vertices: Vec<String>,
    pub arrows: BTreeMap<(usize, usize, i64), u64>,
}

impl GradedQuiver {
    pub fn arrows_between(&self, source: usize, target: usize) -> DegreeTable {
        DegreeTable::from_pairs(self.arrows.iter().filter(|((s, t, _), _)| *s == source && *t == target).map(|((_, _, d), &m)| (*d, m)))
    }

    /// Sorted `(is_loop, degree, multiplicity)` triples, forgetting which
    /// vertices the arrows join.
    pub fn shape(&self) -> Vec<(bool, i64, u64)> {
        let mut out: Vec<_> = self.arrows.iter().map(|(&(s, t, d), &m)| (s == t, d, m)).collect();
        out.sort_unstable();
        out
    }
}

/// Result of the cluster test; `witness` names an offending pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

fn dim_to_u64(q: &Q) -> u64 {
    q.to_integer().to_u64().expect("dimension is a nonnegative integer")
}

/// `h^0(P^(n-1), O(k))`
fn sections(n: i64, k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        dim_to_u64(&poly_binomial(n - 1, (n - 1) as usize).eval_int(k))
    }
}

/// `H^*(X, O_X(k))` from the Koszul sequence `0 -> O(k-n) -> O(k) -> O_X(k) -> 0`.
pub fn line_bundle_cohomology(n: i64, k: i64) -> DegreeTable {
    if n == 2 {
        // two reduced points
        return DegreeTable::from_pairs([(0, 2)]);
    }
    // Serre duality on P^(n-1): h^top(O(m)) = h^0(O(-m-n))
    let h_top = |m: i64| sections(n, -m - n);
    DegreeTable::from_pairs([(0, sections(n, k) - sections(n, k - n)), (n - 2, h_top(k - n) - h_top(k))])
}

/// `chi(O_X(t + mu))` as a polynomial in `t`.
pub fn hilbert_poly(n: i64, mu: i64) -> Poly {
    let r = (n - 1) as usize;
    let shift = |p: &Poly| -> Poly {
        // substitute t -> t + mu
        let mut out = Poly::zero();
        let mut power = Poly::one();
        for c in p.coeffs() {
            out = &out + &power.scale(c);
            power = &power * &Poly::linear(Q::from_integer(mu.into()));
        }
        out
    };
    shift(&(&poly_binomial(n - 1, r) - &poly_binomial(-1, r)))
}

/// Hilbert polynomial divided by its leading coefficient.
fn reduced(p: &Poly) -> Poly {
    let lead = p.coeffs().last().cloned().expect("Hilbert polynomial is nonzero");
    p.scale(&lead.recip())
}

/// Compares reduced Hilbert polynomials from the top coefficient down.
fn compare_reduced(a: &Poly, b: &Poly) -> Ordering {
    let (ra, rb) = (reduced(a), reduced(b));
    let len = ra.coeffs().len().max(rb.coeffs().len());
    (0..len).rev().map(|k| ra.coeff(k).cmp(&rb.coeff(k))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

/// The model: the finite object set of one hypersurface with its Hom tables.
pub struct StabilityLab {
    n: i64,
    orbit: OrbitHomTable,
}

impl StabilityLab {
    pub fn new(n: i64) -> Result<Self> {
        Ok(StabilityLab { n, orbit: orbit_hom_table(n)? })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    fn gepner_phase(&self, s: i64, shift: i64) -> Q {
        Q::new((-2 * s + shift * self.n).into(), (2 * self.n).into())
    }

    /// `tau~^(-mu) O` with `mu = r + n k` stored as residue `r` and shift `-2k`.
    pub fn gepner_object(&self, mu: i64) -> Entry {
        let (r, k) = (mu.rem_euclid(self.n), mu.div_euclid(self.n));
        Entry { label: Label::Translate(r), shift: -2 * k, phase: self.gepner_phase(r, -2 * k) }
    }

    pub fn line_bundle(&self, mu: i64) -> Entry {
        let red = reduced(&hilbert_poly(self.n, mu));
        let slope = red.degree().filter(|&d| d > 0).map_or_else(Q::zero, |d| red.coeff(d - 1));
        Entry { label: Label::LineBundle(mu), shift: 0, phase: slope }
    }

    /// `tau~^(-mu) O` for `mu` in the window, ordered by decreasing phase.
    pub fn gepner_collection(&self, first: i64, last: i64) -> Result<StableCollection> {
        if first > last {
            return Err(Error::InvalidArgument(format!("empty window {first}..={last}")));
        }
        let entries = (first..=last).map(|mu| self.gepner_object(mu)).collect();
        Ok(StableCollection { n: self.n, kind: Kind::Gepner, entries })
    }

    /// `O(mu)` for `mu` in the window, ordered by reduced Hilbert polynomial.
    pub fn large_radius_collection(&self, first: i64, last: i64) -> Result<StableCollection> {
        if first > last {
            return Err(Error::InvalidArgument(format!("empty window {first}..={last}")));
        }
        let mut entries: Vec<Entry> = (first..=last).map(|mu| self.line_bundle(mu)).collect();
        entries.sort_by(|a, b| self.compare(b, a));
        if entries.windows(2).any(|w| self.compare(&w[0], &w[1]) == Ordering::Equal) {
            return Err(Error::Degenerate("reduced Hilbert polynomials tie".into()));
        }
        Ok(StableCollection { n: self.n, kind: Kind::LargeRadius, entries })
    }

    /// Stability order: phase for Gepner objects, (shift, reduced Hilbert
    /// polynomial) for line bundles.
    pub fn compare(&self, a: &Entry, b: &Entry) -> Ordering {
        match (a.label, b.label) {
            (Label::LineBundle(x), Label::LineBundle(y)) => {
                a.shift.cmp(&b.shift).then_with(|| compare_reduced(&hilbert_poly(self.n, x), &hilbert_poly(self.n, y)))
            }
            _ => a.phase.cmp(&b.phase),
        }
    }

    /// Whether the entries strictly decrease in the stability order.
    pub fn is_ordered(&self, c: &StableCollection) -> bool {
        c.entries.windows(2).all(|w| self.compare(&w[0], &w[1]) == Ordering::Greater)
    }

    /// `d -> dim Hom^d(a, b)`.
    pub fn hom(&self, a: &Entry, b: &Entry) -> Result<DegreeTable> {
        let base = match (a.label, b.label) {
            (Label::Translate(s), Label::Translate(t)) => self.orbit.lifted(s - t),
            (Label::LineBundle(x), Label::LineBundle(y)) => line_bundle_cohomology(self.n, y - x),
            _ => return Err(Error::UnavailablePair(format!("{a} and {b}"))),
        };
        // Hom^d(A[i], B[j]) = Hom^(d+j-i)(A, B)
        Ok(base.shifted(a.shift - b.shift))
    }

    pub fn heart_quiver(&self, c: &StableCollection, start: usize, len: usize) -> Result<GradedQuiver> {
        if !(1..=3).contains(&len) || start + len > c.entries.len() {
            return Err(Error::BadSegment(start));
        }
        let seg = &c.entries[start..start + len];
        let mut arrows = BTreeMap::new();
        for (i, a) in seg.iter().enumerate() {
            for (j, b) in seg.iter().enumerate() {
                for (d, m) in self.hom(a, b)?.iter() {
                    if i != j || d >= 1 {
                        arrows.insert((i, j, d), m);
                    }
                }
            }
        }
        Ok(GradedQuiver { vertices: seg.iter().map(ToString::to_string).collect(), arrows })
    }

    /// `(E >= F)` with `Hom(E, F[1]) != 0` becomes `(F[1] >= E)`.
    pub fn mutate(&self, c: &StableCollection, i: usize) -> Result<StableCollection> {
        if i + 1 >= c.entries.len() {
            return Err(Error::IndexOutOfRange { index: i + 1, len: c.entries.len() });
        }
        let (e, f) = (&c.entries[i], &c.entries[i + 1]);
        if self.hom(e, f)?.get(1) == 0 {
            return Err(Error::MutationRejected(format!("Hom({e}, {f}[1]) = 0")));
        }
        let lifted = self.shifted(f, 1);
        let mut out = c.clone();
        out.entries[i] = lifted;
        out.entries[i + 1] = e.clone();
        Ok(out)
    }

    /// `(A >= B)` with `Hom(B, A) != 0` becomes `(B >= A[-1])`; undoes `mutate`.
    pub fn mutate_dual(&self, c: &StableCollection, i: usize) -> Result<StableCollection> {
        if i + 1 >= c.entries.len() {
            return Err(Error::IndexOutOfRange { index: i + 1, len: c.entries.len() });
        }
        let (a, b) = (&c.entries[i], &c.entries[i + 1]);
        if self.hom(b, a)?.get(0) == 0 {
            return Err(Error::MutationRejected(format!("Hom({b}, {a}) = 0")));
        }
        let lowered = self.shifted(a, -1);
        let mut out = c.clone();
        out.entries[i] = b.clone();
        out.entries[i + 1] = lowered;
        Ok(out)
    }

    fn shifted(&self, e: &Entry, j: i64) -> Entry {
        let shift = e.shift + j;
        let phase = match e.label {
            Label::Translate(s) => self.gepner_phase(s, shift),
            Label::LineBundle(_) => e.phase.clone(),
        };
        Entry { label: e.label, shift, phase }
    }

    /// Gepner: apply `tau~` (phases rotate by `1/n`). Large radius: tensor
    /// with `O(1)`.
    pub fn monodromy(&self, c: &StableCollection, kind: Kind) -> Result<StableCollection> {
        if kind != c.kind {
            return Err(Error::KindMismatch);
        }
        let entries = c
            .entries
            .iter()
            .map(|e| match e.label {
                Label::Translate(0) => {
                    let shift = e.shift + 2;
                    Entry { label: Label::Translate(self.n - 1), shift, phase: self.gepner_phase(self.n - 1, shift) }
                }
                Label::Translate(s) => Entry { label: Label::Translate(s - 1), shift: e.shift, phase: self.gepner_phase(s - 1, e.shift) },
                Label::LineBundle(mu) => Entry { shift: e.shift, ..self.line_bundle(mu + 1) },
            })
            .collect();
        Ok(StableCollection { entries, ..c.clone() })
    }

    /// Distinct objects have no morphisms in degrees `<= 0` and each
    /// object has one-dimensional `End^0`.
    pub fn is_cluster_collection(&self, objects: &[Entry]) -> Result<ClusterCheck> {
        for (i, a) in objects.iter().enumerate() {
            let end = self.hom(a, a)?;
            if end.get(0) != 1 || end.iter().any(|(d, _)| d < 0) {
                return Ok(ClusterCheck { holds: false, witness: Some(format!("End({a}) = {end}")) });
            }
            for (j, b) in objects.iter().enumerate() {
                if i == j {
                    continue;
                }
                let t = self.hom(a, b)?;
                if t.iter().any(|(d, _)| d <= 0) {
                    return Ok(ClusterCheck { holds: false, witness: Some(format!("Hom({a}, {b}) = {t}")) });
                }
            }
        }
        Ok(ClusterCheck { holds: true, witness: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_values() {
        assert_eq!(hilbert_poly(5, 0).eval_int(1), Q::from_integer(5.into()));
        assert_eq!(hilbert_poly(5, 0).eval_int(0), Q::zero());
        assert_eq!(hilbert_poly(4, 0).eval_int(1), Q::from_integer(4.into()));
        assert_eq!(hilbert_poly(5, 2).eval_int(-1), hilbert_poly(5, 0).eval_int(1));
    }

    #[test]
    fn koszul_tables() {
        assert_eq!(line_bundle_cohomology(5, 0), DegreeTable::from_pairs([(0, 1), (3, 1)]));
        assert_eq!(line_bundle_cohomology(5, 1), DegreeTable::from_pairs([(0, 5)]));
        assert_eq!(line_bundle_cohomology(5, -1), DegreeTable::from_pairs([(3, 5)]));
        assert_eq!(line_bundle_cohomology(3, 0), DegreeTable::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(line_bundle_cohomology(4, 0), DegreeTable::from_pairs([(0, 1), (2, 1)]));
    }

    #[test]
    fn koszul_euler_matches_hilbert() {
        for n in 3..=7 {
            for k in -9..9 {
                assert_eq!(Q::from_integer(line_bundle_cohomology(n, k).euler().into()), hilbert_poly(n, k).eval_int(0), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn gepner_phases() {
        let lab = StabilityLab::new(2).unwrap();
        let c = lab.gepner_collection(0, 1).unwrap();
        assert_eq!(&c.entries[0].phase - &c.entries[1].phase, Q::new(1.into(), 2.into()));
    }
}
