//! Dense numerical workbench for reproducing kernel Hilbert modules over the
//! polydisc at finite truncation.
//!
//! The crate models one-variable Hardy and integer-weight Bergman spaces as
//! truncated weighted shifts, forms their n-fold tensor products, and provides
//! the subspace calculus needed to test tensor-factorization of quotient
//! modules, co-doubly commuting submodule decompositions, cross-commutators,
//! and wandering subspaces — each with explicit numerical defects instead of
//! yes/no answers.

pub mod error;
pub mod kernel;
pub mod model;
pub mod operator;
pub mod quotient;
pub mod submodule;
pub mod subspace;
pub mod tensor;
pub mod wandering;

pub use error::CoreError;
pub use kernel::{KernelSpec, TruncatedSpace};
pub use model::ZeroSet;
pub use operator::{C64, DenseOperator, SpaceTag};
pub use subspace::Subspace;
pub use tensor::TensorSpace;

/// Shared relative singular-value threshold for all rank decisions.
///
/// Every rank-revealing step (orthonormalization, closures, factorizations,
/// commutator ranks) uses this same relative cutoff so that ranks computed in
/// different modules are mutually consistent.
pub const RANK_TOL: f64 = 1e-10;
