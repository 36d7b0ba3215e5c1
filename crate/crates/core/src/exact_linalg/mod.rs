//! Exact linear algebra over the rationals and the Gaussian rationals.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{parse_rational, q, qi, sqrt_rational, Field, GScalar, Scalar};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("cannot parse scalar literal {0:?}")]
    ParseScalar(String),
    #[error("vector length mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("subspace is not contained in the given larger subspace")]
    NotContained,
}

/// Converts a rational vector to a Gaussian one.
pub fn complexify(v: &[Scalar]) -> Vec<GScalar> {
    v.iter().cloned().map(GScalar::real).collect()
}
