use thiserror::Error;

/// Errors raised by the special functions, the two level solvers and the reporting layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} out of domain: {detail}")]
    Domain { what: &'static str, detail: String },

    #[error("singular point: {0}")]
    Singular(String),

    #[error("{method} did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("turning points out of order: {0}")]
    Ordering(String),

    #[error("quantization residual has no sign change for x2 up to {limit}")]
    BracketNotFound { limit: f64 },

    #[error("no branch combination gives C(u0) = 0 (smallest |C| = {best:e})")]
    NoValidRoot { best: f64 },

    #[error("truncation order j = {0} is not supported (only j = 0 and j = 1)")]
    UnsupportedOrder(u32),

    #[error("consecutive values coincide at position {index}; rate undefined")]
    DegenerateDifference { index: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        what,
        detail: detail.into(),
    }
}
