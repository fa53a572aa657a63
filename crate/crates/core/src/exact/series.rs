//! Truncated formal series with exact rational coefficients.
//!
//! [`HalfSeries`] is a series in `w = q^{1/2}` known up to (and including) a
//! truncation order; [`BiSeries`] adds a second formal variable `x` on top of
//! it, one `HalfSeries` per power of `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Q;
use crate::error::{Error, Result};

/// Truncated series `sum c_m w^m`, `0 <= m <= trunc`, sparse and exact.
///
/// Coefficients of `w^m` with `m > trunc` are unknown; arithmetic never
/// reports beyond the smaller truncation of its operands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HalfSeries {
    coeffs: BTreeMap<usize, Q>,
    trunc: usize,
}

impl HalfSeries {
    pub fn zero(trunc: usize) -> Self {
        HalfSeries { coeffs: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(0, Q::one(), trunc)
    }

    /// `c * w^exp`, dropped entirely when `exp > trunc`.
    pub fn monomial(exp: usize, c: Q, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.set(exp, c);
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed; terms beyond `trunc` are discarded.
    pub fn from_terms<I>(terms: I, trunc: usize) -> Self
    where
        I: IntoIterator<Item = (usize, Q)>,
    {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (e, c) in terms {
            if e <= trunc {
                *acc.entry(e).or_insert_with(Q::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        HalfSeries { coeffs: acc, trunc }
    }

    /// Integer coefficients listed densely from `w^0`.
    pub fn from_ints(coeffs: &[i64], trunc: usize) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e, Q::from_integer(c.into()))), trunc)
    }

    fn set(&mut self, exp: usize, c: Q) {
        if exp > self.trunc {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, c);
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `w^exp`, or `None` past the truncation order.
    pub fn coeff(&self, exp: usize) -> Option<Q> {
        if exp > self.trunc {
            None
        } else {
            Some(self.coeffs.get(&exp).cloned().unwrap_or_else(Q::zero))
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let trunc = trunc.min(self.trunc);
        HalfSeries { coeffs: self.coeffs.range(..=trunc).map(|(&e, c)| (e, c.clone())).collect(), trunc }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.trunc);
        }
        HalfSeries { coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(), trunc: self.trunc }
    }

    /// Multiplication by `w^k`; the truncation order moves up with it.
    pub fn shift_up(&self, k: usize) -> Self {
        HalfSeries { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(), trunc: self.trunc + k }
    }

    /// Substitution `w -> w^k`. A series known through `w^T` is known through
    /// `w^{kT + k - 1}` afterwards, since the skipped exponents vanish.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        HalfSeries { coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect(), trunc: self.trunc * k + (k - 1) }
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs.get(&0).ok_or(Error::NotInvertible("zero constant term"))?;
        let inv0 = c0.recip();
        let n = self.trunc;
        let mut out: Vec<Q> = vec![Q::zero(); n + 1];
        out[0] = inv0.clone();
        for m in 1..=n {
            let mut acc = Q::zero();
            for (e, c) in self.coeffs.range(1..=m) {
                let prev = &out[m - e];
                if !prev.is_zero() {
                    acc += c * prev;
                }
            }
            out[m] = -(acc * &inv0);
        }
        Ok(Self::from_terms(out.into_iter().enumerate(), n))
    }

    /// Exact quotient `self / den` where `den` may start at a positive power
    /// of `w`. The numerator must vanish to at least the same order; the
    /// result is known through `min(self.trunc, den.trunc) - val(den)`.
    pub fn checked_div(&self, den: &HalfSeries) -> Result<Self> {
        let v = den.valuation().ok_or(Error::NotInvertible("division by zero series"))?;
        if let Some(nv) = self.valuation() {
            if nv < v {
                return Err(Error::NotInvertible("numerator vanishes to lower order than denominator"));
            }
        }
        let trunc = self.trunc.min(den.trunc);
        if trunc < v {
            return Err(Error::NotInvertible("denominator valuation exceeds truncation"));
        }
        let out_trunc = trunc - v;
        let lowered = |s: &HalfSeries| HalfSeries { coeffs: s.coeffs.range(v..=trunc).map(|(&e, c)| (e - v, c.clone())).collect(), trunc: out_trunc };
        let num = lowered(self);
        let unit = lowered(den);
        Ok(&num * &unit.inverse()?)
    }
}

impl fmt::Debug for HalfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(w^{})", self, self.trunc + 1)
    }
}

impl fmt::Display for HalfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})w")?,
                _ => write!(f, "({c})w^{e}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a HalfSeries> for &'a HalfSeries {
    type Output = HalfSeries;
    fn add(self, rhs: &'a HalfSeries) -> HalfSeries {
        let trunc = self.trunc.min(rhs.trunc);
        HalfSeries::from_terms(self.coeffs.range(..=trunc).chain(rhs.coeffs.range(..=trunc)).map(|(&e, c)| (e, c.clone())), trunc)
    }
}

impl<'a> Sub<&'a HalfSeries> for &'a HalfSeries {
    type Output = HalfSeries;
    fn sub(self, rhs: &'a HalfSeries) -> HalfSeries {
        let trunc = self.trunc.min(rhs.trunc);
        HalfSeries::from_terms(
            self.coeffs.range(..=trunc).map(|(&e, c)| (e, c.clone())).chain(rhs.coeffs.range(..=trunc).map(|(&e, c)| (e, -c.clone()))),
            trunc,
        )
    }
}

impl<'a> Mul<&'a HalfSeries> for &'a HalfSeries {
    type Output = HalfSeries;
    fn mul(self, rhs: &'a HalfSeries) -> HalfSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut acc: Vec<Q> = vec![Q::zero(); trunc + 1];
        for (&ea, ca) in self.coeffs.range(..=trunc) {
            for (&eb, cb) in rhs.coeffs.range(..=trunc - ea) {
                acc[ea + eb] += ca * cb;
            }
        }
        HalfSeries::from_terms(acc.into_iter().enumerate(), trunc)
    }
}

impl Neg for &HalfSeries {
    type Output = HalfSeries;
    fn neg(self) -> HalfSeries {
        HalfSeries { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(), trunc: self.trunc }
    }
}

/// Series in `x` whose coefficients are [`HalfSeries`] in `w`, known through
/// `x^xtrunc`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    slots: Vec<HalfSeries>,
}

impl BiSeries {
    /// One `HalfSeries` per power `x^0 .. x^xtrunc`.
    pub fn from_slots(slots: Vec<HalfSeries>) -> Self {
        assert!(!slots.is_empty(), "a BiSeries needs at least the x^0 slot");
        BiSeries { slots }
    }

    pub fn zero(xtrunc: usize, wtrunc: usize) -> Self {
        BiSeries { slots: vec![HalfSeries::zero(wtrunc); xtrunc + 1] }
    }

    pub fn one(xtrunc: usize, wtrunc: usize) -> Self {
        let mut s = Self::zero(xtrunc, wtrunc);
        s.slots[0] = HalfSeries::one(wtrunc);
        s
    }

    pub fn xtrunc(&self) -> usize {
        self.slots.len() - 1
    }

    /// Coefficient of `x^m`, `None` past the x-truncation.
    pub fn x_coeff(&self, m: usize) -> Option<&HalfSeries> {
        self.slots.get(m)
    }

    pub fn slots(&self) -> &[HalfSeries] {
        &self.slots
    }

    pub fn scale(&self, c: &Q) -> Self {
        BiSeries { slots: self.slots.iter().map(|s| s.scale(c)).collect() }
    }

    /// Formal logarithm `sum_{k>=1} (-1)^{k+1} (f-1)^k / k`, computed through
    /// the recurrence `m L_m = m f_m - sum_{k<m} k L_k f_{m-k}` that follows
    /// from `f L' = f'`.
    pub fn log(&self) -> Result<Self> {
        let f0 = &self.slots[0];
        if !is_one(f0) {
            return Err(Error::LogNonUnit);
        }
        let xt = self.xtrunc();
        let mut out: Vec<HalfSeries> = Vec::with_capacity(xt + 1);
        out.push(HalfSeries::zero(f0.trunc()));
        for m in 1..=xt {
            let mut acc = self.slots[m].scale(&Q::from_integer(m.into()));
            for k in 1..m {
                if out[k].is_zero() || self.slots[m - k].is_zero() {
                    continue;
                }
                let term = (&out[k] * &self.slots[m - k]).scale(&Q::from_integer(k.into()));
                acc = &acc - &term;
            }
            out.push(acc.scale(&Q::new(1.into(), m.into())));
        }
        Ok(BiSeries { slots: out })
    }

    /// Formal exponential of a series with vanishing `x^0` slot, through
    /// `m F_m = sum_{k=1..m} k g_k F_{m-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.slots[0].is_zero() {
            return Err(Error::ExpNonZeroConstant);
        }
        let xt = self.xtrunc();
        let wt = self.slots.iter().map(HalfSeries::trunc).max().unwrap_or(0);
        let mut out: Vec<HalfSeries> = Vec::with_capacity(xt + 1);
        out.push(HalfSeries::one(wt));
        for m in 1..=xt {
            let mut acc = HalfSeries::zero(wt);
            for k in 1..=m {
                if self.slots[k].is_zero() {
                    continue;
                }
                let term = (&self.slots[k] * &out[m - k]).scale(&Q::from_integer(k.into()));
                acc = &acc + &term;
            }
            out.push(acc.scale(&Q::new(1.into(), m.into())));
        }
        Ok(BiSeries { slots: out })
    }
}

fn is_one(s: &HalfSeries) -> bool {
    s.coeffs.len() == 1 && s.coeffs.get(&0).is_some_and(One::is_one)
}

impl<'a> Add<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &'a BiSeries) -> BiSeries {
        BiSeries { slots: self.slots.iter().zip(&rhs.slots).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &'a BiSeries) -> BiSeries {
        BiSeries { slots: self.slots.iter().zip(&rhs.slots).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &'a BiSeries) -> BiSeries {
        let xt = self.xtrunc().min(rhs.xtrunc());
        let slots = (0..=xt)
            .map(|m| {
                let mut acc: Option<HalfSeries> = None;
                for i in 0..=m {
                    let p = &self.slots[i] * &rhs.slots[m - i];
                    acc = Some(match acc {
                        None => p,
                        Some(a) => &a + &p,
                    });
                }
                acc.expect("m >= 0 gives at least one product")
            })
            .collect();
        BiSeries { slots }
    }
}
