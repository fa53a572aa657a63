//! Exact arithmetic substrate: rationals, dense polynomials, truncated series
//! and rational linear algebra. Nothing in the crate uses floating point.

pub mod linalg;
pub mod poly;
pub mod series;

pub use poly::{poly_binomial, Poly};
pub use series::{BiSeries, HalfSeries};

/// Arbitrary-precision rational number.
pub type Q = num_rational::BigRational;

/// `n` as a rational.
pub fn q_int(n: i64) -> Q {
    Q::from_integer(n.into())
}
