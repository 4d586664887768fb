//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by group-kernel and fusion-ring operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Power iteration failed to reach the requested tolerance.
    #[error("eigenvalue iteration did not converge within {iterations} iterations (tolerance {tolerance:e})")]
    NonConvergence { iterations: u64, tolerance: f64 },

    /// A series operation was asked for on a non-nilpotent ring.
    #[error("ring is not nilpotent: upper central series stabilizes at rank {stable_rank}")]
    NotNilpotent { stable_rank: usize },

    /// An enumeration exceeded its configured cap.
    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    /// A structural property that must hold for validated inputs failed.
    /// This signals a bug (or an invalid input that slipped past validation),
    /// never a normal data condition.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// Quotient requested by a non-normal subgroup.
    #[error("subgroup of order {order} is not normal")]
    NotNormal { order: usize },

    /// The pair (F, Γ) does not exactly factorize the ambient group.
    #[error("not an exact factorization: {0}")]
    NotExactFactorization(String),

    /// A matched pair failed the group axioms on its Zappa-Szép product.
    #[error("invalid matched pair: {0}")]
    InvalidMatchedPair(String),

    /// Every random class-sum combination tried was degenerate.
    #[error("character table: degenerate class-sum combination after {attempts} attempts")]
    DegenerateCombination { attempts: u32 },

    /// A fusion coefficient failed to round to a nonnegative integer.
    #[error("non-integral fusion coefficient at ({i}, {j}, {k}): {value}")]
    NonIntegralCoefficient { i: usize, j: usize, k: usize, value: f64 },

    /// Tambara-Yamagami requires an abelian base group.
    #[error("group of order {order} is not abelian")]
    NotAbelian { order: usize },

    /// A central-series record violated its invariants.
    #[error("invalid series: {0}")]
    InvalidSeries(String),

    /// Malformed input data (files, specs, permutation strings).
    #[error("parse error: {0}")]
    Parse(String),

    /// I/O failure while reading or writing files.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
