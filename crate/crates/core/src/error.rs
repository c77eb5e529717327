use thiserror::Error;

use crate::detect::BergeWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge {{{0},{1}}} is not present")]
    MissingEdge(usize, usize),

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input is not admissible: it contains a Berge-{family}")]
    NotAdmissible {
        family: String,
        witness: Box<BergeWitness>,
    },

    #[error("pipeline order: {0}")]
    PipelineOrder(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("forbidden step: {0} and {1} are joined by a red edge")]
    ForbiddenStep(usize, usize),

    #[error("non-termination guard tripped after {0} steps")]
    StepBudget(usize),

    #[error("incomplete input: missing {0}")]
    IncompleteInput(String),

    #[error("out of domain: {0}")]
    OutOfDomain(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
