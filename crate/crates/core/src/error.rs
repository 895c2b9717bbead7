use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("DIMACS parse error on line {line}: {reason}")]
    Dimacs { line: usize, reason: String },

    #[error("invalid graph descriptor `{descriptor}`: {reason}")]
    Descriptor { descriptor: String, reason: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Search kernels work on single-word vertex bitsets.
    #[error("graph on {n} vertices exceeds the {limit}-vertex limit of this operation")]
    TooLarge { n: usize, limit: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("time limit exceeded")]
    Timeout,

    #[error("witness `{name}` not reproduced: expected ({expected_chi}, {expected_complement}), computed ({chi}, {chi_complement})")]
    WitnessMismatch {
        name: String,
        expected_chi: usize,
        expected_complement: usize,
        chi: usize,
        chi_complement: usize,
    },
}
