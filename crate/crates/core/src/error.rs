use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    Singular,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("index out of range: {0}")]
    BadIndex(String),
    #[error("bivector is not decomposable")]
    NotDecomposable,
    #[error("unknown root index {0}")]
    UnknownRootIndex(usize),
    #[error("constraint violated: {0}")]
    ConstraintViolated(&'static str),
    #[error("group element does not have determinant 1")]
    NotUnimodular,
    #[error("operation needs rank n = 3, got n = {0}")]
    WrongRank(usize),
    #[error("quiver point is not in N")]
    NotInN,
    #[error("a beta map is not surjective")]
    NotSurjective,
    #[error("the c-coordinates are not pairwise distinct")]
    DegenerateC,
    #[error("window element is not in the minimal orbit closure")]
    NotInOrbit,
    #[error("projected moment is not upper triangular")]
    NotTriangular,
    #[error("parameter must be nonzero")]
    ZeroParameter,
}

pub type Result<T> = std::result::Result<T, Error>;
