//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, NilError>;

#[derive(Debug, Error)]
pub enum NilError {
    /// An angle was requested for a zero tangent vector.
    #[error("zero tangent vector has no direction")]
    ZeroVector,

    /// A negative arc length was passed where only s >= 0 makes sense.
    #[error("arc length must be non-negative, got {0}")]
    NegativeArcLength(f64),

    /// The shooting target coincides with the origin.
    #[error("shooting target is the origin")]
    OriginTarget,

    /// No multi-start cell converged to the requested tolerance.
    #[error("shooting failed for target ({x}, {y}, {z}): best residual {best_residual:.3e}")]
    SolverFailure {
        best_residual: f64,
        x: f64,
        y: f64,
        z: f64,
    },

    /// Triangle vertices are not pairwise distinct.
    #[error("triangle vertices must be pairwise distinct")]
    DegenerateTriangle,

    /// A triangle side could not be solved; vertices are 1-based.
    #[error("no geodesic found for triangle side A{from} -> A{to}: {source}")]
    UnsolvableSide {
        from: usize,
        to: usize,
        #[source]
        source: Box<NilError>,
    },

    /// The two endpoint configurations of a π-sum search lie on the same
    /// side of π.
    #[error(
        "angle sums {hyperbolic_sum} and {fibre_sum} do not straddle pi; \
         the bisection has no bracket"
    )]
    NoStraddle {
        hyperbolic_sum: f64,
        fibre_sum: f64,
    },

    /// Bisection ran out of iterations before meeting the tolerance.
    #[error("bisection stalled: best |angle sum - pi| = {best:.3e} > tolerance {tol:.3e}")]
    BisectionFailure { tol: f64, best: f64 },

    /// A precondition on user input failed.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl NilError {
    /// Exit-code classification used by front ends: `true` for failures of
    /// the numeric solver (as opposed to bad input).
    pub fn is_solver_failure(&self) -> bool {
        matches!(
            self,
            NilError::SolverFailure { .. }
                | NilError::UnsolvableSide { .. }
                | NilError::BisectionFailure { .. }
        )
    }
}
