use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("a monomial ring needs at least one variable")]
    NoVariables,

    #[error("cannot build an ideal from an empty generating set")]
    EmptyIdeal,

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid variable order: {0}")]
    InvalidOrder(String),

    #[error("{count} variable orders exceed the permutation budget of {budget} (raise it with POLYMAT_MAX_PERMS)")]
    PermutationBudget { count: u128, budget: u128 },

    #[error("Taylor oracle limited to {limit} generators, got {gens}")]
    OracleUnavailable { gens: usize, limit: usize },

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("corpus bounds exceeded: {0}")]
    CorpusBounds(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
