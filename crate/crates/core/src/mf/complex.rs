//! Graded matrix factorizations of `x^n` over `k[x]` (deg x = 1) and their
//! morphism complexes.
//!
//! A factorization is `P0 --p0--> P1 --p1--> P0(n)` with both composites
//! equal to multiplication by `x^n`. Free modules are sums of `S(e)`; a
//! degree-zero map `S(e) -> S(e')` is `c * x^(e'-e)` and exists only when
//! `e' >= e`. Every matrix is therefore stored as its scalar coefficients,
//! the exponent being implied by the twists.

use num_traits::{One, Zero};

use crate::exact::{linalg, Q};

type Mat = Vec<Vec<Q>>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Q::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &row[k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn mat_neg(a: &Mat) -> Mat {
    a.iter().map(|r| r.iter().map(|c| -c.clone()).collect()).collect()
}

fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![Q::zero(); cols]; rows]
}

/// A graded matrix factorization of `x^n` of finite rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub(crate) n: i64,
    /// twists of the summands of `P0`
    pub(crate) even: Vec<i64>,
    /// twists of the summands of `P1`
    pub(crate) odd: Vec<i64>,
    /// `P0 -> P1`, rows indexed by `odd`, columns by `even`
    pub(crate) p0: Mat,
    /// `P1 -> P0(n)`, rows indexed by `even`, columns by `odd`
    pub(crate) p1: Mat,
}

impl Factorization {
    /// The rank-one factorization `S(e0) --x^a--> S(e0+a) --x^(n-a)--> S(e0+n)`.
    pub fn rank_one(n: i64, a: i64, e0: i64) -> Self {
        Factorization { n, even: vec![e0], odd: vec![e0 + a], p0: vec![vec![Q::one()]], p1: vec![vec![Q::one()]] }
    }

    /// Direct sum of factorizations over the same potential.
    pub fn direct_sum(parts: &[Factorization]) -> Self {
        let n = parts[0].n;
        let (re, ro): (usize, usize) = parts.iter().map(|p| (p.even.len(), p.odd.len())).fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        let mut out = Factorization { n, even: Vec::new(), odd: Vec::new(), p0: zeros(ro, re), p1: zeros(re, ro) };
        let (mut oe, mut oo) = (0, 0);
        for p in parts {
            assert_eq!(p.n, n, "direct sum over different potentials");
            for (i, row) in p.p0.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    out.p0[oo + i][oe + j] = c.clone();
                }
            }
            for (i, row) in p.p1.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    out.p1[oe + i][oo + j] = c.clone();
                }
            }
            out.even.extend(&p.even);
            out.odd.extend(&p.odd);
            oe += p.even.len();
            oo += p.odd.len();
        }
        out
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Whether both composites are `x^n` times the identity and every
    /// nonzero entry has a nonnegative exponent.
    pub fn is_valid(&self) -> bool {
        let id = |k: usize| -> Mat { (0..k).map(|i| (0..k).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect() };
        if self.even.len() != self.odd.len() {
            return false;
        }
        let exps_ok = self.p0.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, c)| c.is_zero() || self.odd[i] >= self.even[j]))
            && self.p1.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, c)| c.is_zero() || self.even[i] + self.n >= self.odd[j]));
        exps_ok && mat_mul(&self.p1, &self.p0) == id(self.even.len()) && mat_mul(&self.p0, &self.p1) == id(self.odd.len())
    }

    /// Grading twist `M(k)`.
    pub fn twist(&self, k: i64) -> Self {
        Factorization {
            n: self.n,
            even: self.even.iter().map(|e| e + k).collect(),
            odd: self.odd.iter().map(|e| e + k).collect(),
            p0: self.p0.clone(),
            p1: self.p1.clone(),
        }
    }

    /// Cohomological shift `M[j]`, with `M[1] = (P1, P0(n), -p1, -p0)`.
    pub fn shift(&self, j: i64) -> Self {
        let mut m = self.clone();
        for _ in 0..j.unsigned_abs() {
            m = if j > 0 {
                Factorization { n: m.n, even: m.odd.clone(), odd: m.even.iter().map(|e| e + m.n).collect(), p0: mat_neg(&m.p1), p1: mat_neg(&m.p0) }
            } else {
                Factorization { n: m.n, even: m.odd.iter().map(|e| e - m.n).collect(), odd: m.even.clone(), p0: mat_neg(&m.p1), p1: mat_neg(&m.p0) }
            };
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.even.len()
    }
}

/// A degree-zero chain map between two factorizations, as scalar matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub(crate) f0: Mat,
    pub(crate) f1: Mat,
}

impl ChainMap {
    /// `g . f`
    pub fn then(&self, g: &ChainMap) -> ChainMap {
        ChainMap { f0: mat_mul(&g.f0, &self.f0), f1: mat_mul(&g.f1, &self.f1) }
    }

    /// The same map viewed between the shifted objects `M[j] -> N[j]`.
    pub fn shift(&self, j: i64) -> ChainMap {
        if j.rem_euclid(2) == 0 {
            self.clone()
        } else {
            ChainMap { f0: self.f1.clone(), f1: self.f0.clone() }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f0.iter().chain(&self.f1).all(|r| r.iter().all(Zero::is_zero))
    }
}

#[derive(Clone, Copy, Debug)]
struct Slot {
    block: u8,
    row: usize,
    col: usize,
    exponent: i64,
}

/// `Hom^0(M, N)` in the homotopy category, computed from the weight-zero
/// part of the morphism complex.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Factorization,
    target: Factorization,
    slots: Vec<Slot>,
    boundaries: Vec<Vec<Q>>,
    basis: Vec<Vec<Q>>,
}

impl HomSpace {
    pub fn compute(source: &Factorization, target: &Factorization) -> Self {
        let (m, t) = (source, target);
        let mut slots = Vec::new();
        for (i, &g) in t.even.iter().enumerate() {
            for (j, &e) in m.even.iter().enumerate() {
                if g >= e {
                    slots.push(Slot { block: 0, row: i, col: j, exponent: g - e });
                }
            }
        }
        for (i, &g) in t.odd.iter().enumerate() {
            for (j, &e) in m.odd.iter().enumerate() {
                if g >= e {
                    slots.push(Slot { block: 1, row: i, col: j, exponent: g - e });
                }
            }
        }
        let nvars = slots.len();

        // f1 p0 - q0 f0 = 0 and f0 p1 - q1 f1 = 0, one row per matrix entry
        let mut equations: Vec<Vec<Q>> = Vec::new();
        for i in 0..t.odd.len() {
            for j in 0..m.even.len() {
                let mut row = vec![Q::zero(); nvars];
                for (v, s) in slots.iter().enumerate() {
                    if s.block == 1 && s.row == i {
                        row[v] += &m.p0[s.col][j];
                    }
                    if s.block == 0 && s.col == j {
                        row[v] -= &t.p0[i][s.row];
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    equations.push(row);
                }
            }
        }
        for i in 0..t.even.len() {
            for j in 0..m.odd.len() {
                let mut row = vec![Q::zero(); nvars];
                for (v, s) in slots.iter().enumerate() {
                    if s.block == 0 && s.row == i {
                        row[v] += &m.p1[s.col][j];
                    }
                    if s.block == 1 && s.col == j {
                        row[v] -= &t.p1[i][s.row];
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    equations.push(row);
                }
            }
        }
        let cycles = if equations.is_empty() { (0..nvars).map(|k| unit(nvars, k)).collect() } else { linalg::nullspace(&equations, nvars) };

        // homotopies h0: P0 -> Q1(-n), h1: P1 -> Q0;
        // f0 = h1 p0 + q1 h0, f1 = q0 h1 + h0 p1
        let mut boundaries = Vec::new();
        for (i, &g) in t.odd.iter().enumerate() {
            for (j, &e) in m.even.iter().enumerate() {
                if g - t.n >= e {
                    let mut h0 = zeros(t.odd.len(), m.even.len());
                    h0[i][j] = Q::one();
                    let f = ChainMap { f0: mat_mul(&t.p1, &h0), f1: mat_mul(&h0, &m.p1) };
                    boundaries.push(flatten(&slots, &f));
                }
            }
        }
        for (i, &g) in t.even.iter().enumerate() {
            for (j, &e) in m.odd.iter().enumerate() {
                if g >= e {
                    let mut h1 = zeros(t.even.len(), m.odd.len());
                    h1[i][j] = Q::one();
                    let f = ChainMap { f0: mat_mul(&h1, &m.p0), f1: mat_mul(&t.p0, &h1) };
                    boundaries.push(flatten(&slots, &f));
                }
            }
        }

        let mut spanning = boundaries.clone();
        let mut basis = Vec::new();
        for z in cycles {
            if !linalg::in_span(&spanning, &z) {
                spanning.push(z.clone());
                basis.push(z);
            }
        }
        HomSpace { source: source.clone(), target: target.clone(), slots, boundaries, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Representatives of a basis of the cohomology.
    pub fn basis(&self) -> Vec<ChainMap> {
        self.basis.iter().map(|v| self.unflatten(v)).collect()
    }

    /// Internal weight of each basis class: the `x`-degree of the leading
    /// nonzero component of its representative (`f0` block first).
    pub fn weights(&self) -> Vec<i64> {
        self.basis
            .iter()
            .map(|v| {
                let k = v.iter().position(|c| !c.is_zero()).expect("basis vectors are nonzero");
                self.slots[k].exponent
            })
            .collect()
    }

    /// Whether a chain map `source -> target` is null-homotopic.
    pub fn is_null(&self, f: &ChainMap) -> bool {
        let v = flatten(&self.slots, f);
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        !self.boundaries.is_empty() && linalg::in_span(&self.boundaries, &v)
    }

    /// Whether `f` satisfies the chain-map equations and only uses
    /// components of nonnegative exponent.
    pub fn is_chain_map(&self, f: &ChainMap) -> bool {
        let (m, t) = (&self.source, &self.target);
        let support_ok =
            |mat: &Mat, rows: &[i64], cols: &[i64]| mat.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, c)| c.is_zero() || rows[i] >= cols[j]));
        support_ok(&f.f0, &t.even, &m.even)
            && support_ok(&f.f1, &t.odd, &m.odd)
            && mat_mul(&f.f1, &m.p0) == mat_mul(&t.p0, &f.f0)
            && mat_mul(&f.f0, &m.p1) == mat_mul(&t.p1, &f.f1)
    }

    fn unflatten(&self, v: &[Q]) -> ChainMap {
        let (m, t) = (&self.source, &self.target);
        let mut f = ChainMap { f0: zeros(t.even.len(), m.even.len()), f1: zeros(t.odd.len(), m.odd.len()) };
        for (s, c) in self.slots.iter().zip(v) {
            let target = if s.block == 0 { &mut f.f0 } else { &mut f.f1 };
            target[s.row][s.col] = c.clone();
        }
        f
    }
}

fn unit(len: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    v[k] = Q::one();
    v
}

/// Coordinates of a chain map in slot order. Entries outside the slots are
/// expected to vanish (negative exponents).
fn flatten(slots: &[Slot], f: &ChainMap) -> Vec<Q> {
    slots.iter().map(|s| if s.block == 0 { f.f0[s.row][s.col].clone() } else { f.f1[s.row][s.col].clone() }).collect()
}
