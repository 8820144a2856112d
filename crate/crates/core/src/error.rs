//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong while building or evaluating a
/// discrimination problem. Numeric payloads carry the offending residual
/// or eigenvalue so callers can report how far an input was from valid.
#[derive(Debug, Error)]
pub enum DiscrimError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("operator deviates from Hermitian by {0:.3e}")]
    NotHermitian(f64),
    #[error("operator has negative eigenvalue {0:.6e}")]
    NotPositive(f64),
    #[error("trace is {0}, expected 1")]
    InvalidTrace(f64),
    #[error("state norm is {0}, expected 1")]
    NotNormalized(f64),
    #[error("priors sum to {0}, expected 1")]
    InvalidPriors(f64),
    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("expectation value has imaginary part {0:.3e}")]
    ImaginaryPart(f64),
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("tolerances must be strictly positive, got {0}")]
    InvalidTolerance(f64),
    #[error("states are linearly dependent (smallest Gram eigenvalue {0:.3e})")]
    LinearlyDependent(f64),
    #[error("identical states cannot be discriminated unambiguously")]
    IdenticalStates,
    #[error("angle {0} outside supported range ({1})")]
    AngleOutOfRange(f64, &'static str),
    #[error("requested success probabilities are infeasible (inconclusive element eigenvalue {0:.6e})")]
    InfeasibleSuccess(f64),
    #[error("outcome {0} occurs with probability 0, confidence undefined")]
    ZeroProbabilityOutcome(usize),
    #[error("POM element {index} has rank {rank}, expected at most 1")]
    NotRankOne { index: usize, rank: usize },
    #[error("POM does not sum to the identity (residual {0:.3e})")]
    Incomplete(f64),
    #[error("invalid outcome labels: {0}")]
    BadLabels(&'static str),
    #[error("generator is not unitary (residual {0:.3e})")]
    NotUnitary(f64),
    #[error("generator period check failed: V^{n} deviates from identity by {residual:.3e}")]
    NotPeriodic { n: usize, residual: f64 },
    #[error("invalid weights: {0}")]
    InvalidWeights(&'static str),
    #[error("ensemble shape not supported: {0}")]
    UnsupportedEnsemble(&'static str),
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid ensemble file: {0}")]
    InvalidEnsembleFile(String),
}

pub type Result<T> = std::result::Result<T, DiscrimError>;
