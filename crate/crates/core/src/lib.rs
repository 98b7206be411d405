//! Finite semigroups, their commuting graphs and exact graph invariants.
//!
//! The crate is organised bottom-up:
//!
//! * [`semigroup`] holds the Cayley-table representation, the element-level
//!   algebra (centre, idempotents, inverses, powers) and the classification
//!   predicates (band, regular, inverse, Clifford, completely regular,
//!   completely simple), plus the `sgt-table v1` text format.
//! * [`constructions`] builds the concrete families: transformation and
//!   partial-injection monoids, permutation and cyclic groups, Rees matrix
//!   semigroups, zero-unions, direct products, the girth families and the
//!   Vagner–Preston representation.
//! * [`commgraph`] builds commuting graphs and computes girth, clique number,
//!   chromatic number, diameter and knit degree.
//! * [`enumeration`] generates every semigroup of a small order up to
//!   isomorphism.
//! * [`verify`] reruns the quantitative results as a machine-readable report.

pub mod commgraph;
pub mod constructions;
pub mod enumeration;
mod error;
pub mod semigroup;
pub mod verify;

pub use commgraph::{GraphMetrics, LeftPathWitness, SimpleGraph};
pub use constructions::{MapSemigroup, PartialMap, ReesMatrixData, SizeCaps};
pub use error::{Error, Result};
pub use semigroup::{ElementSet, FiniteSemigroup, SemilatticeDecomposition, UnaryInverseMap};
pub use verify::VerificationReport;
