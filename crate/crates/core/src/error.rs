use thiserror::Error;

use crate::rootcore::SimpleType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}{}", hint.as_ref().map(|h| format!(" ({h})")).unwrap_or_default())]
    InvalidRank {
        family: char,
        rank: usize,
        hint: Option<String>,
    },

    #[error("cannot parse label `{0}`")]
    Parse(String),

    #[error("invalid parameters for {label}: {reason}")]
    InvalidParameters { label: String, reason: String },

    #[error("{0} is compact; only non-compact real forms are supported")]
    Compact(String),

    #[error("{label} is not simple or is a low-rank coincidence; use {alias} instead")]
    Alias { label: String, alias: String },

    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch {
        expected: SimpleType,
        found: SimpleType,
    },

    #[error("invalid partition {partition} for {ty}: {reason}")]
    InvalidPartition {
        ty: SimpleType,
        partition: String,
        reason: String,
    },

    #[error("{0} is not a classical type")]
    NotClassical(SimpleType),

    #[error("{0} is not an exceptional type")]
    NotExceptional(SimpleType),

    #[error(
        "rank {rank} exceeds the oracle bound {bound}; raise the bound explicitly to continue"
    )]
    OracleBound { rank: usize, bound: usize },

    #[error("diagram weights must be non-negative integers: {0}")]
    NonIntegralWeights(String),

    #[error("no basis table row for {0}")]
    NoBasisTable(String),

    #[error("diagram has {found} nodes, expected {expected}")]
    DiagramLength { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
