//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Q;

/// Dense polynomial `c_0 + c_1 v + ... + c_d v^d`; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `c v^k`
    pub fn monomial(k: usize, c: Q) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    /// `v + a`
    pub fn linear(a: Q) -> Self {
        Self::new(vec![a, Q::one()])
    }

    /// `1 + v + ... + v^m`, the Poincare polynomial of projective m-space.
    pub fn projective_space(m: usize) -> Self {
        Self::new(vec![Q::one(); m + 1])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, v: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * v + c)
    }

    pub fn eval_int(&self, v: i64) -> Q {
        self.eval(&Q::from_integer(v.into()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, `None` if any coefficient is a proper fraction.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Renders the polynomial in the variable `var`, highest power first:
    /// `q^3+21q^2+181q+821`. Non-integral coefficients print as `p/q*`.
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let power = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&power);
            } else if abs.is_integer() {
                out.push_str(&format!("{abs}{power}"));
            } else {
                out.push_str(&format!("{abs}*{power}"));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

/// The polynomial binomial `(t+shift)(t+shift-1)...(t+shift-choose+1)/choose!`
/// as a polynomial in `t`. Unlike the combinatorial binomial it does not
/// vanish for negative arguments: at `shift=-1, choose=4, t=0` it is 1.
pub fn poly_binomial(shift: i64, choose: usize) -> Poly {
    let mut p = Poly::one();
    let mut fact = BigInt::one();
    for i in 0..choose {
        p = &p * &Poly::linear(Q::from_integer((shift - i as i64).into()));
        fact *= BigInt::from(i + 1);
    }
    p.scale(&Q::new(BigInt::one(), fact))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_like_printed_polynomials() {
        assert_eq!(Poly::from_ints(&[821, 181, 21, 1]).to_string(), "q^3+21q^2+181q+821");
        assert_eq!(Poly::from_ints(&[7, 1]).to_string(), "q+7");
        assert_eq!(Poly::from_ints(&[1]).to_string(), "1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_ints(&[-1, 0, -3]).to_string(), "-3q^2-1");
        assert_eq!(Poly::new(vec![Q::zero(), Q::new(5.into(), 6.into())]).render("t"), "5/6*t");
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn polynomial_binomial_values() {
        assert_eq!(poly_binomial(-1, 4).eval_int(0), Q::from_integer(1.into()));
        assert_eq!(poly_binomial(4, 4).eval_int(1), Q::from_integer(5.into()));
        assert_eq!(poly_binomial(-1, 4).eval_int(2), Q::zero());
        assert_eq!(poly_binomial(7, 0), Poly::one());
    }

    #[test]
    fn binomial_matches_pascal_on_nonnegative_range() {
        for n in 0..12i64 {
            for k in 0..8usize {
                let mut pascal = BigInt::one();
                for i in 0..k {
                    pascal = pascal * BigInt::from(n - i as i64) / BigInt::from(i + 1);
                }
                assert_eq!(poly_binomial(0, k).eval_int(n), Q::from_integer(pascal));
            }
        }
    }
}
