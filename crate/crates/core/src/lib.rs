//! Fusion rings and their Jordan-Hölder invariants.
//!
//! This crate computes structural data of fusion rings (based rings with
//! nonnegative integer structure constants, a unit, and a duality involution
//! satisfying Frobenius reciprocity): Frobenius-Perron dimensions, fusion
//! subrings, the universal grading, the upper central series, and — for
//! nilpotent rings — composition series together with their simple factor
//! groups. All composition series of a nilpotent fusion ring are equivalent
//! (same factors counted with multiplicities); [`series::jordan_holder_check`]
//! verifies this empirically by exhaustive enumeration.
//!
//! A finite-group kernel ([`group`]) backs the ring-level computations:
//! Cayley-table groups, subgroup and normal-subgroup enumeration, quotients,
//! group composition series, isomorphism testing, character tables (class-sum
//! method), and Zappa-Szép products of matched pairs arising from exact
//! factorizations.
//!
//! The [`construct`] module builds the standard examples from group data
//! (pointed rings, representation rings, Drinfeld double rings,
//! Tambara-Yamagami rings, Deligne products) and evaluates the corollary
//! formulas that reduce Morita-level composition factors to group theory.

pub mod construct;
pub mod error;
pub mod grading;
pub mod group;
pub mod ring;
pub mod series;
mod util;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
