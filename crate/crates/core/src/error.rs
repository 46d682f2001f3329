use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid circulant spec: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("power iteration did not converge after {iterations} iterations (last change {last_change:e})")]
    NoConvergence { iterations: usize, last_change: f64 },

    #[error("structural check failed: {0}")]
    Structural(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
