use thiserror::Error;

use crate::rational::Vector;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point set is not centrally symmetric: {0} has no antipode")]
    Symmetry(Vector),

    #[error("degenerate geometry: {0}")]
    Geometry(String),

    #[error("functional {functional} has dual norm {norm}, expected 1")]
    FunctionalNotNorming { functional: Vector, norm: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("norm is not absolute: {0}")]
    NotAbsolute(String),

    #[error("unsupported dimension {dim} (limit {limit}) for {what}")]
    UnsupportedDimension {
        what: &'static str,
        dim: usize,
        limit: usize,
    },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
