use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("cannot parse simple type label {0:?}")]
    InvalidTypeLabel(String),

    #[error("cannot parse root {0:?}")]
    InvalidRootLabel(String),

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("roots {beta} and {alpha} are parallel")]
    ParallelRoots { beta: String, alpha: String },

    #[error("expected a nonzero vector")]
    ZeroVector,

    #[error("point does not lie in the given fiber")]
    PointNotInFiber,

    #[error("subspace is not stable under the Cartan subalgebra")]
    NotTStable,

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("subalgebra has dimension {0}, at least 2 is required")]
    SubalgebraTooSmall(usize),

    #[error("point does not lie in the toral part of the subalgebra")]
    PointNotInToralPart,

    #[error("normalizer is not stable under the Cartan subalgebra, no stable complement exists")]
    NormalizerNotTStable,

    #[error("root {0} is not a root of the complement")]
    RootNotInComplement(String),

    #[error("structure constant table failed validation: {0}")]
    Construction(String),
}
