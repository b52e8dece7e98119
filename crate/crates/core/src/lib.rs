//! Exact-arithmetic computations on jets of Fedosov structures.
//!
//! A Fedosov structure is a symplectic form together with a compatible
//! symmetric connection. Working in Darboux coordinates (the form is the
//! constant standard symplectic matrix), this crate represents k-jets of
//! such structures by graded homogeneous components, assembles the linear
//! system cutting out the Lie algebra of the stabilizer of a jet under
//! origin-preserving diffeomorphism jets, and computes stabilizer and
//! orbit dimensions by exact kernel computation over the rationals.
//!
//! The `moduli` module carries the closed-form side: dimension counts of
//! jet spaces, orbit-dimension formulas, the coefficients of the moduli
//! Poincare series, and a report layer that cross-checks the constructive
//! values against printed closed forms and an Euler-operator form.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and no
//! floating point is used anywhere.

pub mod algebra;
pub mod error;
pub mod jets;
pub mod moduli;
pub mod stabilizer;

pub use algebra::{binomial, HomogeneousPolynomial, LinearSystem, Monomial, Rational};
pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
