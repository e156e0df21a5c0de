//! Error type shared by all solver modules.

use thiserror::Error;

/// Errors surfaced by mesh construction, functional evaluation and the solvers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A caller-supplied argument is out of its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The problem data violate hypothesis (h_pq) or (h_ab).
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    /// An exponent below 2 met a vanishing element gradient with no smoothing.
    #[error("singular gradient: {0}")]
    SingularGradient(String),

    /// The weighted q-norm of the field is zero, so no normalization exists.
    #[error("degenerate direction: weighted q-norm is zero")]
    DegenerateDirection,

    /// The direction cannot be scaled onto the Nehari set.
    #[error("infeasible direction: {0}")]
    InfeasibleDirection(String),

    /// Constant fields are excluded from the Nehari set.
    #[error("constant field has no Nehari scaling")]
    ConstantDirection,

    /// Random cone-point generation kept hitting degenerate draws.
    #[error("cone point generation failed after {0} attempts")]
    GenerationFailure(usize),

    /// Every seeded restart failed to produce a feasible starting point.
    #[error("no feasible starting point: {0}")]
    NoFeasibleStart(String),

    /// Mesh file could not be parsed.
    #[error("mesh io: {0}")]
    MeshIo(String),
}

pub type Result<T> = std::result::Result<T, Error>;
