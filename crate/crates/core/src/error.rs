use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A concrete object showing that the caller's promised hypotheses do not
/// hold for the input (as opposed to a bug in the construction).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// An independent set larger than the promised bound `k`.
    IndependentSet(Vec<usize>),
    /// Vertices each having at most `k` neighbours outside their jump
    /// interior; they span a subgraph of maximum degree at most `k`.
    LowDegreeSystem(Vec<usize>),
    /// Free-form description when no vertex witness applies.
    Note(String),
}

impl Witness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Witness::IndependentSet(v) | Witness::LowDegreeSystem(v) => v,
            Witness::Note(_) => &[],
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::IndependentSet(v) => write!(f, "independent set of size {}: {:?}", v.len(), v),
            Witness::LowDegreeSystem(v) => write!(f, "low-degree system {:?}", v),
            Witness::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("hypothesis violation in {stage}: {witness}")]
    HypothesisViolation { stage: String, witness: Witness },

    #[error("randomised stage {stage} failed after {attempts} attempts (seed {seed})")]
    RandomnessFailure { stage: String, seed: u64, attempts: usize },

    #[error("internal contradiction in {stage}: {msg}")]
    Internal { stage: String, msg: String },
}

impl Error {
    pub(crate) fn violation(stage: impl Into<String>, witness: Witness) -> Self {
        Error::HypothesisViolation {
            stage: stage.into(),
            witness,
        }
    }

    pub(crate) fn internal(stage: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Internal {
            stage: stage.into(),
            msg: msg.into(),
        }
    }

    /// Prefix the stage tag of a hypothesis violation or internal error.
    pub fn in_stage(self, outer: &str) -> Self {
        match self {
            Error::HypothesisViolation { stage, witness } => Error::HypothesisViolation {
                stage: format!("{outer}/{stage}"),
                witness,
            },
            Error::Internal { stage, msg } => Error::Internal {
                stage: format!("{outer}/{stage}"),
                msg,
            },
            Error::RandomnessFailure { stage, seed, attempts } => Error::RandomnessFailure {
                stage: format!("{outer}/{stage}"),
                seed,
                attempts,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
