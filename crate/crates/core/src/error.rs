use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor/layer shape mismatches.
    #[error("dimension error: {0}")]
    Dim(String),

    /// Invalid configuration (bad preset, bad method/technique pair, bad hyperparameters).
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation needed at least one available view and none was present,
    /// or a required view/feature was absent.
    #[error("availability error: {0}")]
    Availability(String),

    /// Out-of-range index (class labels, categorical codes).
    #[error("index error: {0}")]
    Index(String),

    /// API contract violation (e.g. backward on a non-scalar loss).
    #[error("contract error: {0}")]
    Contract(String),

    /// Object used in an invalid state (e.g. second backward on the same graph).
    #[error("state error: {0}")]
    State(String),

    /// Non-finite values produced by numeric code.
    #[error("numerical error: {0}")]
    Numeric(String),

    /// Dataset loading/parsing problems.
    #[error("data error: {0}")]
    Data(String),

    /// Training failures (divergence, empty training set).
    #[error("training error: {0}")]
    Training(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI: 2 config, 3 data, 4 training, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Data(_) | Error::Io(_) => 3,
            Error::Training(_) => 4,
            _ => 1,
        }
    }
}
