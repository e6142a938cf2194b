use thiserror::Error;

/// Errors reported by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} exceeds ambient dimension {dim}")]
    InvalidBlade { index: usize, dim: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    UnsupportedDimension { dim: usize, max: usize },
    #[error("embedding does not fit in target dimension {target}")]
    EmbedOverflow { target: usize },
    #[error("expected index pair i < j, got ({i}, {j})")]
    InvalidIndexPair { i: usize, j: usize },
    #[error("index range {start}..={end} is invalid for dimension {dim}")]
    InvalidRange {
        start: usize,
        end: usize,
        dim: usize,
    },
    #[error("Witt fixtures require dimension >= 2, got {dim}")]
    WittDimension { dim: usize },
    #[error("factor is not harmonic on its designated range")]
    NotHarmonic,
    #[error("factor is not monogenic on its designated range")]
    NotMonogenic,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is not an exact eigenvector")]
    NotEigenvector,
    #[error("degenerate denominator when evaluating a rational function of the Euler operator at degree {degree}")]
    DegenerateDenominator { degree: u32 },
    #[error("invalid branching chain: {reason}")]
    InvalidChain { reason: String },
    #[error("no base-case basis for head dimension {p}; base cases exist for p = 1 and p = 2")]
    InvalidBase { p: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("construction invariant violated: {0}")]
    Construction(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
