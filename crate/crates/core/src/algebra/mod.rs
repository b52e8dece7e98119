//! Exact scalars, multivariate homogeneous polynomials, big-integer
//! combinatorics and sparse exact linear algebra.
//!
//! All arithmetic in this crate happens over `Rational`
//! (arbitrary-precision, always in lowest terms with positive
//! denominator); nothing is ever rounded.

mod binom;
mod linsys;
mod monomial;
mod poly;

pub use binom::{binomial, factorial};
pub use linsys::{from_int_rows, LinearSystem, RankKernel};
pub use monomial::{monomials_of_degree, Monomial};
pub use poly::HomogeneousPolynomial;

/// Exact scalar: arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
/// Exact integer scalar.
pub type Int = num_bigint::BigInt;

/// Rational from an integer literal.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Int::from(v))
}

/// Rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}
