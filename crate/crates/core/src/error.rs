//! Error type shared across the crate.
//!
//! Input problems (bad text, invalid multicharges, inadmissible data) are
//! reported through [`enum@Error`]. Violations of internal invariants —
//! logic bugs, not user errors — panic via assertions instead.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("e must be an integer >= 2 (got {0})")]
    InvalidContext(i64),

    #[error("invalid multicharge: {0}")]
    InvalidMulticharge(String),

    #[error("level mismatch: multipartition has {found} components but multicharge has level {expected}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("invalid multipartition: {0}")]
    InvalidMultiPartition(String),

    #[error("multipartition is not FLOTW for this multicharge: {0}")]
    NotFlotw(String),

    #[error("the empty multisegment has no minimal multicharge (level 0 unsupported)")]
    EmptyMultisegment,

    #[error(
        "multicharge is inadmissible: kappa_{residue} = {kappa} < eps*_{residue} = {required}"
    )]
    Inadmissible {
        residue: u32,
        kappa: usize,
        required: usize,
    },

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
