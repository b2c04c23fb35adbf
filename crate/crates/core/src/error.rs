use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(
        "dimension {0} is even: a modular category is maximally non-self-dual \
         if and only if its FP dimension is odd"
    )]
    EvenDimension(u64),

    #[error("cannot parse type at `{token}`: {message}")]
    Parse { token: String, message: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("no reference table for dimension {0}")]
    NotFound(u64),

    #[error("the oracle does not restate filter {0}")]
    NotSupported(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
