use thiserror::Error;

/// Errors produced by the geometry and tiling computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed textual input. `position` is the byte offset of the
    /// offending token.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The bisection bracket for the equilateral realization holds no root.
    #[error("no equilateral realization: {0}")]
    NoRealization(String),

    /// Vertex classes of a tiling disagree (geometry, valence or angles).
    #[error("inconsistent tiling classes: {0}")]
    Inconsistent(String),

    /// A decomposition gluing check failed for some vertex class.
    #[error("decomposition check `{check}` failed for class {class}: residual {residual:e}")]
    Decomposition {
        class: usize,
        check: &'static str,
        residual: f64,
    },

    /// The volume formula hit a vanishing denominator.
    #[error("numerically degenerate tetrahedron: {0}")]
    Degenerate(String),

    /// NaN or infinity appeared in an intermediate result.
    #[error("non-finite intermediate value in {0}")]
    NonFinite(&'static str),

    /// An iterative solver ran out of iterations.
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

/// Coarse grouping of [`Error`] variants, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Parse,
    Domain,
    Numerical,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. } => ErrorCategory::Parse,
            Error::Domain(_)
            | Error::NoRealization(_)
            | Error::Inconsistent(_)
            | Error::Decomposition { .. } => ErrorCategory::Domain,
            Error::Degenerate(_) | Error::NonFinite(_) | Error::NoConvergence { .. } => {
                ErrorCategory::Numerical
            }
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
