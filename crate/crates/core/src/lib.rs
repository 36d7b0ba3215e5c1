//! Exact computations around prolongations of subalgebras of `sp(2n, R)`.
//!
//! The crate covers exact linear algebra over the rationals and Gaussian rationals, the
//! Poisson algebra of symmetric tensors, prolongation chains and finite-type verdicts, a
//! catalog of named subalgebras of `sp(4, R)`, formal vector field realizations of transitive
//! algebras, and the Fedosov connection of a symplectic Lie algebra.

pub mod catalog;
pub mod exact_linalg;
pub mod fedosov;
pub mod lie;
pub mod prolongation;
pub mod realizations;
pub mod record;
pub mod weyl_poisson;
