//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: expected {expected}")]
    InvalidRank {
        family: char,
        rank: usize,
        expected: &'static str,
    },

    #[error("Weyl group order exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("brute-force oracle domain exceeded: {0}")]
    OracleTooLarge(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p = {p} must exceed the Coxeter number h = {h}")]
    PrimeTooSmall { p: u64, h: u64 },

    #[error("weight {lambda} is not dominant")]
    NotDominant { lambda: String },

    #[error("ambiguous decomposition: {lambda} = p·mu + w·0 admits {count} (mu, w) pairs")]
    AmbiguousDecomposition { lambda: String, count: usize },

    #[error(
        "alternating sum for {lambda} in degree {degree} is negative ({sum}); \
         this signals an implementation bug, never a valid state"
    )]
    NegativeDimension {
        lambda: String,
        degree: u64,
        sum: String,
    },

    #[error("in type G2 the pairing bound requires a long root; root index {index} is short")]
    ShortRootInG2 { index: usize },

    #[error("no entry in the reference table covers {0}")]
    NotCovered(String),

    #[error("cache rejected: {0}")]
    CacheMismatch(String),

    #[error("cache unreadable: {0}")]
    CacheCorrupt(String),
}

pub type Result<T> = std::result::Result<T, Error>;
