//! Realizations of prolongation algebras by formal vector fields.
//!
//! Elements are represented by polynomial truncations. A finite-dimensional algebra is given
//! by an explicit basis of fields; closure is checked exactly and the order filtration at the
//! origin is read off from weighted coordinates.

use std::collections::BTreeMap;
use std::fmt::Debug;

use thiserror::Error;

use crate::exact_linalg::{LinalgError, Scalar};
use crate::lie::LieError;
use crate::weyl_poisson::WeylError;

pub mod algebra;
pub mod cohomology;
pub mod families;
pub mod p1model;
pub mod p2model;
pub mod plane;
pub mod series;
pub mod triangle;

pub use algebra::{FieldAlgebra, FiltrationReport};
pub use p1model::P1Element;
pub use p2model::P2Element;
pub use plane::PlaneVF;
pub use series::Poly;

#[derive(Debug, Error)]
pub enum RealizationError {
    #[error("basis elements are linearly dependent")]
    LinearlyDependent,
    #[error("bracket of {0} and {1} leaves the span")]
    NotClosed(String, String),
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: String, reason: String },
    #[error("space of functions is not invariant under {0}")]
    NotInvariant(String),
    #[error("invalid triangle top ({k}, {l}): need k >= 1, |l| <= k and k = l mod 2")]
    BadTop { k: i64, l: i64 },
    #[error("node set is not symmetric: z^{m} zbar^{n} present without its conjugate")]
    NotSymmetric { m: u32, n: u32 },
    #[error("action is not a representation: failure on basis pair ({0}, {1})")]
    NotRepresentation(usize, usize),
    #[error("unknown base algebra {0}")]
    UnknownBase(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// A formal vector field with weighted coordinates.
///
/// `weight` is the filtration degree of a coordinate: a component of weight `m` vanishes to
/// order `m + 1` at the origin along the base, counted with the grading of the model.
pub trait FormalField: Clone + Debug + Send + Sync {
    type Key: Ord + Clone + Debug;
    const MANIFOLD_DIM: usize;

    fn bracket(&self, o: &Self) -> Self;
    fn coords(&self) -> BTreeMap<Self::Key, Scalar>;
    fn weight(k: &Self::Key) -> i64;
    fn describe(&self) -> String;
    fn add(&self, o: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    fn zero_like(&self) -> Self;
}
