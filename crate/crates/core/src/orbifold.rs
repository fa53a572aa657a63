//! Poincare polynomials of the Fermat quotient stacks from twisted
//! sectors.
//!
//! Group elements are tuples in `(Z/n)^n` modulo the diagonal. Grouping the
//! coordinates of an element by value splits `{1..n}` into blocks; a block
//! of size `b >= 2` contributes the class of `P^(b-2)`, singletons nothing.
//! Elements are aggregated by the multiset of block sizes.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{Poly, Q};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sector {
    /// block sizes, decreasing
    pub blocks: Vec<usize>,
    #[serde(serialize_with = "big_string")]
    pub class_count: BigInt,
    /// contribution of a single element
    pub contribution: Poly,
}

fn big_string<S: serde::Serializer>(b: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorDecomposition {
    pub n: usize,
    pub sectors: Vec<Sector>,
}

impl SectorDecomposition {
    pub fn total_classes(&self) -> BigInt {
        self.sectors.iter().map(|s| &s.class_count).sum()
    }

    pub fn poincare(&self) -> Poly {
        self.sectors.iter().map(|s| s.contribution.scale(&Q::from_integer(s.class_count.clone()))).sum()
    }
}

/// Integer partitions of `n` as decreasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Set partitions of `{1..n}` with the given block sizes:
/// `n! / prod_b (b!)^(m_b) m_b!`.
pub fn set_partition_count(blocks: &[usize]) -> BigInt {
    let n: usize = blocks.iter().sum();
    let mut den = BigInt::one();
    let mut i = 0;
    while i < blocks.len() {
        let b = blocks[i];
        let mult = blocks[i..].iter().take_while(|&&x| x == b).count();
        den *= factorial(b).pow(mult as u32) * factorial(mult);
        i += mult;
    }
    factorial(n) / den
}

/// Assignments of distinct values to `r` blocks, modulo the diagonal:
/// `(n-1)(n-2)...(n-r+1)`.
fn colorings(n: usize, r: usize) -> BigInt {
    (1..r).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Sum of `P(P^(b-2))` over blocks of size at least two.
pub fn block_contribution(blocks: &[usize]) -> Poly {
    blocks.iter().filter(|&&b| b >= 2).map(|&b| Poly::projective_space(b - 2)).sum()
}

pub fn sector_decomposition(n: usize) -> Result<SectorDecomposition> {
    if n < 2 {
        return Err(Error::ExponentTooSmall(n as i64));
    }
    let sectors = partitions(n)
        .into_iter()
        .map(|blocks| {
            let class_count = set_partition_count(&blocks) * colorings(n, blocks.len());
            let contribution = block_contribution(&blocks);
            Sector { blocks, class_count, contribution }
        })
        .collect();
    Ok(SectorDecomposition { n, sectors })
}

pub fn poincare(n: usize) -> Result<Poly> {
    Ok(sector_decomposition(n)?.poincare())
}

/// Term-by-term value of
/// `sum_{2<=j<=n, 2<=k<=j} n^(n-j) C(n,j) (-1)^(j-k) P(P^(k-2))`.
pub fn poincare_literal(n: usize) -> Result<Poly> {
    if n < 2 {
        return Err(Error::ExponentTooSmall(n as i64));
    }
    let binom = |a: usize, b: usize| factorial(a) / (factorial(b) * factorial(a - b));
    let mut acc = Poly::zero();
    for j in 2..=n {
        let weight = BigInt::from(n).pow((n - j) as u32) * binom(n, j);
        for k in 2..=j {
            let sign = if (j - k) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            acc = &acc + &Poly::projective_space(k - 2).scale(&Q::from_integer(&weight * sign));
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiteralComparison {
    pub n: usize,
    pub sector_sum: Poly,
    pub literal: Poly,
    pub matches: bool,
}

pub fn compare_literal(n: usize) -> Result<LiteralComparison> {
    let sector_sum = poincare(n)?;
    let literal = poincare_literal(n)?;
    let matches = sector_sum == literal;
    Ok(LiteralComparison { n, sector_sum, literal, matches })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    pub n: usize,
    #[serde(serialize_with = "big_string")]
    pub value: BigInt,
    /// Milnor number `(n-1)^n` of the Brieskorn-Pham singularity
    #[serde(serialize_with = "big_string")]
    pub milnor: BigInt,
    pub matches: bool,
}

pub fn euler_char(n: usize) -> Result<EulerCheck> {
    let value = poincare(n)?.eval_int(1);
    if !value.is_integer() {
        return Err(Error::Degenerate("non-integral Euler characteristic".into()));
    }
    let value = value.to_integer();
    let milnor = BigInt::from(n - 1).pow(n as u32);
    let matches = value == milnor;
    Ok(EulerCheck { n, value, milnor, matches })
}

/// Whether every coefficient up to the degree is a positive integer.
pub fn has_positive_coefficients(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && c > &Q::zero())
}
