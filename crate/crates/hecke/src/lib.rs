//! Exact computations in cyclotomic Hecke algebras `H_n(ξ, Q)` of type
//! `G(ℓ,1,n)` at small rank.
//!
//! [`algebra::Engine`] does normal-form arithmetic; [`bases`] builds the
//! Murphy and seminormal bases on top of it; [`model`] is an independent
//! matrix realization used as an oracle; [`klr`] builds KLR idempotents in
//! the degenerate prime-field case; [`suites`] runs the verification checks.

pub mod algebra;
pub mod bases;
pub mod error;
pub mod klr;
pub mod linalg;
pub mod model;
pub mod params;
pub mod scalar;
pub mod seminormal;
pub mod suites;

pub use algebra::{Element, Engine, Word, WordId};
pub use error::HeckeError;
pub use params::HeckeParams;
pub use scalar::{Field, Scalar};
