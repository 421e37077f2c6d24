use thiserror::Error;

/// Errors raised by the geometry, search and position routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid chord: {0}")]
    InvalidChord(String),
    #[error("singular affine map (det = {0:e})")]
    SingularMap(f64),
    #[error("body is not centrally symmetric")]
    NotSymmetric,
    #[error("direction set is empty")]
    EmptySet,
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("inconsistent request: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
