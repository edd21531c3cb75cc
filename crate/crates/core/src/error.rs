//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole at non-positive integer x = {x}")]
    GammaPole { x: f64 },

    /// The result (or an intermediate) exceeds the f64 range.
    #[error("overflow: {0}")]
    Overflow(&'static str),

    /// A series was requested outside its convergence region.
    #[error("series diverges: {0}")]
    Divergent(&'static str),

    /// Nested quadrature refinement ran out of levels before the
    /// requested agreement was reached.
    #[error("quadrature did not converge within {max_depth} refinements (last delta {last_delta:.3e})")]
    QuadratureStalled { max_depth: usize, last_delta: f64 },

    /// The contour integrand jumped across the principal branch cut
    /// between two adjacent quadrature nodes.
    #[error("branch discontinuity between contour nodes {index} and {}", index + 1)]
    BranchDiscontinuity { index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
