//! Combinatorics of graded Specht modules for cyclotomic (quiver) Hecke
//! algebras of type G(ℓ,1,n).
//!
//! The crate covers the shape-level data everything else indexes on:
//!
//! - [`Multipartition`] and the dominance order,
//! - [`Tableau`] with residues, degrees and codegrees,
//! - [`BlockLabel`] and block defects,
//! - [`Permutation`] with canonical reduced words and Bruhat order,
//! - graded induction filtrations in [`branching`],
//! - the exhaustive combinatorial sweep in [`verify`].

pub mod blocks;
pub mod branching;
pub mod error;
pub mod laurent;
pub mod multipartition;
pub mod node;
pub mod parse;
pub mod report;
pub mod residue;
pub mod symmetric;
pub mod tableau;
pub mod verify;

pub use blocks::{block_of, defect, BlockLabel};
pub use branching::{
    dual_induction_filtration, graded_dim_induced, induction_filtration, Filtration,
    FiltrationLayer,
};
pub use error::Error;
pub use laurent::LaurentPoly;
pub use multipartition::{enumerate_multipartitions, Multipartition};
pub use node::Node;
pub use report::Report;
pub use residue::{QuiverParams, Residue};
pub use symmetric::Permutation;
pub use tableau::Tableau;

pub type Result<T, E = Error> = std::result::Result<T, E>;
