//! Error type shared by all modules.

use crate::jets::ValidationReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Constructions on R^{2n} need n >= 1.
    #[error("half-dimension n must be at least 1")]
    ZeroDimension,

    /// Two values built over different half-dimensions were combined.
    #[error("half-dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// A connection jet failed the compatibility (lowered full symmetry) check.
    #[error("connection jet fails compatibility:\n{0}")]
    InvalidJet(ValidationReport),

    /// Mixed-derivative family is not symmetric at the given pair.
    #[error("mixed-derivative family not symmetric at (i,j)=({i},{j})")]
    FamilyNotSymmetric { i: usize, j: usize },

    /// Mixed-derivative family violates integrability f_{ij,k} = f_{kj,i}.
    #[error("mixed-derivative family not integrable at (i,j,k)=({i},{j},{k})")]
    NotIntegrable { i: usize, j: usize, k: usize },

    /// A degree constraint on a homogeneous family was violated.
    #[error("expected homogeneous degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    /// Named witness jet is not defined for the requested half-dimension.
    #[error("witness `{name}` is not defined for n={n}")]
    UnsupportedWitness { name: String, n: usize },

    /// Parse failure for the canonical jet/system text formats.
    #[error("parse error: {0}")]
    Parse(String),
}
