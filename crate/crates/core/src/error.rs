use std::path::PathBuf;

use crate::graph::{AsnId, EdgeId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,

    #[error("no such edge: {0}")]
    NoSuchEdge(EdgeId),

    #[error("unknown node AS{0}")]
    UnknownNode(AsnId),

    #[error("self-loop on AS{0}")]
    SelfLoop(AsnId),

    #[error("unknown provider ASN: AS{0}")]
    UnknownProvider(AsnId),

    #[error("invalid ASN {0}: must be a positive integer")]
    InvalidAsn(i64),

    #[error("provider set empty")]
    EmptyProviders,

    #[error("no demand nodes: every node is a provider")]
    NoDemandNodes,

    #[error("{file}: self-link at line {line}")]
    SelfLink { file: PathBuf, line: u64 },

    #[error("{file}: line {line}: field `{field}`: {message}")]
    Parse {
        file: PathBuf,
        line: u64,
        field: String,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("budget exceeds edge count ({budget} > {edges})")]
    BudgetExceedsEdgeCount { budget: usize, edges: usize },

    #[error("budget resolves to zero strikes")]
    ZeroBudget,

    #[error("invalid budget `{0}`: expected a positive integer or a percentage such as `20%`")]
    InvalidBudget(String),

    #[error("invalid checkpoint {0}: must lie in (0, 1]")]
    InvalidCheckpoint(f64),

    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),

    #[error("need at least two strategies")]
    NeedTwoStrategies,

    #[error("r_index requires a complete trace; use r_n_index ({strikes} of {edges} edges removed)")]
    IncompleteTrace { strikes: usize, edges: usize },

    #[error("trace has no strikes")]
    EmptyTrace,

    #[error("strike count {n} out of range 1..={len}")]
    StrikeCountOutOfRange { n: usize, len: usize },

    #[error("failed to build worker pool: {0}")]
    WorkerPool(String),
}

impl Error {
    /// Process exit code for the command-line driver: 1 for input errors, 2 for configuration errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceedsEdgeCount { .. }
            | Error::ZeroBudget
            | Error::InvalidBudget(_)
            | Error::InvalidCheckpoint(_)
            | Error::UnknownStrategy(_)
            | Error::NeedTwoStrategies
            | Error::WorkerPool(_) => 2,
            _ => 1,
        }
    }
}
