use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which face of a certification failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertFace {
    /// The inequality was not strict on the inner circle.
    Inner,
    /// No violation was found just outside the claimed radius.
    Outer,
    /// The brute-force grid radius disagrees with the solved radius.
    Oracle,
}

impl std::fmt::Display for CertFace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertFace::Inner => write!(f, "inner"),
            CertFace::Outer => write!(f, "outer"),
            CertFace::Oracle => write!(f, "oracle"),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("invalid radius problem: {0}")]
    InvalidProblem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("series did not converge within {max_terms} terms (|z| = {abs_z:.3e})")]
    NonConvergence { max_terms: usize, abs_z: f64 },

    #[error("ratio denominator vanishes at z = {z}")]
    PoleAtZero { z: Complex64 },

    #[error("no sign change on [{start}, {end}] after {refinements} step halvings")]
    NoSignChange {
        start: f64,
        end: f64,
        refinements: u32,
    },

    #[error("bracket failure: {0}")]
    BracketFailure(String),

    #[error("brute-force scan reached the domain cap {cap:.6e} without a violation")]
    CapReached { cap: f64 },

    #[error("certification failed on the {face} face: {detail}")]
    CertificationFailure { face: CertFace, detail: String },
}
