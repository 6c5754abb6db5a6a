//! Workbench for the ideal theory of finite commutative semirings and the
//! closure-induced topologies on their ideal sets.
//!
//! The crate enumerates the ideals of small semirings, computes subtractive
//! closures, builds point topologies over the ideal set under two closed-set
//! semantics, and runs a registry of executable claims over exhaustive
//! corpora, emitting a machine-checkable witness for every failure.

pub mod claims;
pub mod format;
pub mod ideal;
pub mod nat;
pub mod search;
pub mod semiring;
pub mod topology;

pub use ideal::{Ideal, IdealError, IdealLattice};
pub use nat::NatIdeal;
pub use semiring::{ElemSet, FiniteSemiring, Homomorphism, SemiringError};
pub use topology::{Semantics, SubtractiveSpace};
