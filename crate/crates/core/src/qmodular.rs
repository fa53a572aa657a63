//! q-series around the quantum dilogarithm. Everything lives in
//! `w = q^(1/2)` with exact rational coefficients.

use num_traits::One;
use serde::Serialize;

use crate::exact::{BiSeries, HalfSeries, Q};
use crate::{Error, Result};

/// Sign of the square-root symbol substituted for `L^(1/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootSign {
    /// `L^(1/2) -> -q^(1/2)`
    Minus,
    /// `L^(1/2) -> +q^(1/2)`, the negative control
    Plus,
}

/// `sum_{m>=0} (root)^(m^2) / ((q^m - 1)(q^m - q) ... (q^m - q^(m-1))) x^m`
/// through `x^x_trunc`, each coefficient known through `w^w_trunc`.
pub fn quantum_dilog(x_trunc: usize, w_trunc: usize, sign: RootSign) -> Result<BiSeries> {
    if x_trunc == 0 || w_trunc == 0 {
        return Err(Error::BadTruncation);
    }
    let mut slots = vec![HalfSeries::one(w_trunc)];
    for m in 1..=x_trunc {
        // the denominator vanishes to order w^(m(m-1)); carry that many extra terms
        let work = w_trunc + m * (m - 1);
        let numerator_sign = match sign {
            RootSign::Minus if m % 2 == 1 => -Q::one(),
            _ => Q::one(),
        };
        let numerator = HalfSeries::monomial(m * m, numerator_sign, work);
        let mut denominator = HalfSeries::one(work);
        for i in 0..m {
            let factor = HalfSeries::from_terms([(2 * m, Q::one()), (2 * i, -Q::one())], work);
            denominator = &denominator * &factor;
        }
        slots.push(numerator.checked_div(&denominator)?.truncate(w_trunc));
    }
    Ok(BiSeries::from_slots(slots))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JmMode {
    /// `x^m` coefficient of the logarithm of the dilogarithm
    Extracted,
    /// `(1/m) w^m / (1 - w^(2m))`
    Closed,
}

pub fn jm(m: usize, w_trunc: usize, mode: JmMode) -> Result<HalfSeries> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    match mode {
        JmMode::Closed => Ok(jm_closed(m, w_trunc)),
        JmMode::Extracted => Ok(log_dilog(m, w_trunc, RootSign::Minus)?.x_coeff(m).expect("slot exists").clone()),
    }
}

/// Logarithm of the dilogarithm through `x^x_trunc`.
pub fn log_dilog(x_trunc: usize, w_trunc: usize, sign: RootSign) -> Result<BiSeries> {
    quantum_dilog(x_trunc, w_trunc, sign)?.log()
}

pub fn jm_closed(m: usize, w_trunc: usize) -> HalfSeries {
    let c = Q::new(1.into(), m.into());
    HalfSeries::from_terms((0..).map(|r| m * (2 * r + 1)).take_while(|&e| e <= w_trunc).map(|e| (e, c.clone())), w_trunc)
}

fn int_power(base: usize, exp: i64) -> Q {
    let b = Q::from_integer(base.into());
    let p = (0..exp.unsigned_abs()).fold(Q::one(), |acc, _| acc * &b);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

fn check_odd(k: i64) -> Result<()> {
    if k % 2 == 0 {
        return Err(Error::EvenWeight(k));
    }
    Ok(())
}

/// `sum_{m>0} m^(1-k) J_m` with the closed-form `J_m`.
pub fn gen_function(k: i64, w_trunc: usize) -> Result<HalfSeries> {
    check_odd(k)?;
    let mut acc = HalfSeries::zero(w_trunc);
    for m in 1..=w_trunc {
        acc = &acc + &jm_closed(m, w_trunc).scale(&int_power(m, 1 - k));
    }
    Ok(acc)
}

/// `sum_{m,r>0} m^(-k) (w^(mr) - w^(2mr))`, evaluated term by term.
pub fn double_sum(k: i64, w_trunc: usize) -> Result<HalfSeries> {
    check_odd(k)?;
    let mut terms = Vec::new();
    for m in 1..=w_trunc {
        let c = int_power(m, -k);
        for r in (1..).take_while(|r| m * r <= w_trunc) {
            terms.push((m * r, c.clone()));
            terms.push((2 * m * r, -c.clone()));
        }
    }
    Ok(HalfSeries::from_terms(terms, w_trunc))
}

/// `1 - 24 sum sigma_1(N) q^N`, with `q` stored as the series variable.
pub fn eisenstein_e2(q_trunc: usize) -> HalfSeries {
    let mut sigma = vec![0u64; q_trunc + 1];
    for d in 1..=q_trunc {
        for multiple in (d..=q_trunc).step_by(d) {
            sigma[multiple] += d as u64;
        }
    }
    let terms = std::iter::once((0, Q::one())).chain((1..=q_trunc).map(|n| (n, Q::from_integer((-24 * sigma[n] as i64).into()))));
    HalfSeries::from_terms(terms, q_trunc)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasimodularReport {
    pub w_trunc: usize,
    #[serde(serialize_with = "series_string")]
    pub residual: HalfSeries,
    /// residual after dropping the `E2(w^2)` term
    #[serde(serialize_with = "series_string")]
    pub control: HalfSeries,
}

fn series_string<S: serde::Serializer>(s: &HalfSeries, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&s.to_string())
}

impl QuasimodularReport {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }

    /// Lowest positive exponent where the control residual is nonzero.
    pub fn control_breaks_at(&self) -> Option<usize> {
        self.control.iter().map(|(e, _)| e).find(|&e| e > 0)
    }
}

/// `24 sum m^2 J_m + E2(w) - E2(w^2)`, which vanishes identically.
pub fn quasimodular_check(w_trunc: usize) -> Result<QuasimodularReport> {
    if w_trunc < 4 {
        return Err(Error::BadTruncation);
    }
    let lhs = gen_function(-1, w_trunc)?.scale(&Q::from_integer(24.into()));
    let e2_w = eisenstein_e2(w_trunc);
    let e2_w2 = eisenstein_e2(w_trunc / 2).substitute_power(2).truncate(w_trunc);
    let control = &lhs + &e2_w;
    let residual = &control - &e2_w2;
    Ok(QuasimodularReport { w_trunc, residual, control })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn dilog_low_coefficients() {
        let f = quantum_dilog(3, 12, RootSign::Minus).unwrap();
        assert_eq!(f.x_coeff(0).unwrap(), &HalfSeries::one(12));
        let one = f.x_coeff(1).unwrap();
        for e in 0..=12 {
            assert_eq!(one.coeff(e), Some(if e % 2 == 1 { Q::one() } else { Q::zero() }));
        }
        assert_eq!(f.x_coeff(2).unwrap().valuation(), Some(2));
        assert_eq!(f.x_coeff(3).unwrap().valuation(), Some(3));
    }

    #[test]
    fn jm_closed_examples() {
        let j2 = jm_closed(2, 12);
        assert_eq!(j2.coeff(2), Some(q(1, 2)));
        assert_eq!(j2.coeff(6), Some(q(1, 2)));
        assert_eq!(j2.coeff(4), Some(Q::zero()));
    }

    #[test]
    fn gen_function_examples() {
        assert_eq!(gen_function(1, 10).unwrap().coeff(1), Some(Q::one()));
        assert_eq!(gen_function(-1, 10).unwrap().coeff(2), Some(Q::from_integer(2.into())));
        assert!(gen_function(2, 10).is_err());
    }

    #[test]
    fn e2_coefficients() {
        let e = eisenstein_e2(3);
        assert_eq!(e.coeff(1), Some(Q::from_integer((-24).into())));
        assert_eq!(e.coeff(2), Some(Q::from_integer((-72).into())));
        assert_eq!(e.coeff(3), Some(Q::from_integer((-96).into())));
    }
}
