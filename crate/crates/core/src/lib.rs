//! Approximate-support uncertainty principles for pairs of p-orthonormal bases.
//!
//! Two p-orthonormal bases of an n-dimensional space are represented by their
//! transition matrix `A` (entries `f_j(ω_k)`) and its inverse `B` (entries
//! `g_k(τ_j)`). For a nonzero vector whose f-coordinates are ε-supported on `M`
//! and whose g-coordinates are δ-supported on `N` (both w.r.t. the ℓ^p norm),
//!
//! ```text
//! o(M)^(1/p) · o(N)^(1/q) ≥ max{1 − ε − δ, 0} / max|A|
//! o(M)^(1/q) · o(N)^(1/p) ≥ max{1 − ε − δ, 0} / max|B|
//! ```
//!
//! The crate builds such pairs, computes minimal approximate supports, checks
//! both inequalities, constructs the compressed operators `P_M A P_N` and
//! `P_N B P_M` that sit between the two sides, and searches for vectors with
//! small slack.
//!
//! All index sets are 1-based at every interface boundary (serialization,
//! CLI, [`SupportSet::from_one_based`]); storage is zero-based.

pub mod basis;
pub mod bounds;
pub mod cli;
mod error;
pub mod matrix;
pub mod pnorm;
pub mod search;
pub mod support;

pub use basis::{BasisPair, IsometryCheck, IsometryStatus, VectorInX};
pub use bounds::{NormEstimate, OperatorKind, ProjectedOperator, VerificationReport};
pub use error::{Error, Result};
pub use matrix::CMatrix;
pub use pnorm::{CoefficientVector, HolderPair};
pub use search::Witness;
pub use support::SupportSet;

pub use num_complex::Complex64;
