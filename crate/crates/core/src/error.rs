use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("basis index {0} out of range 0..=7")]
    IndexOutOfRange(usize),

    #[error("commutation class undefined for pair ({0}, {1})")]
    ClassificationUndefined(usize, usize),

    #[error("missing projection Σ_{sigma}^{axis}")]
    MissingProjection { sigma: usize, axis: String },

    #[error("no composition counterexample in the searched space")]
    NoCounterexample,

    #[error("unsupported ternary id {0} (expected 1..=7)")]
    InvalidTernary(u8),

    #[error("at least two gammas are required, found {0}")]
    TooFewGammas(usize),

    #[error("reduction to a complex exponential requires a2 = a3 = 0")]
    NotReducible,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
