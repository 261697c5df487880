use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("factor dimension must be at least 1 (factor {index} has dimension {dim})")]
    InvalidFactorDim { index: usize, dim: usize },

    #[error("a space shape needs at least one factor")]
    EmptyShape,

    #[error("expected {expected} amplitudes, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("empty list where at least one element is required")]
    EmptyList,

    #[error("vector norm {norm:e} is below the degenerate-norm threshold")]
    DegenerateNorm { norm: f64 },

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("coefficients are not normalized: |alpha|^2 + |beta|^2 = {sum}")]
    UnnormalizedCoefficients { sum: f64 },

    #[error("factor index {index} out of range for {factors} factors")]
    FactorIndexOutOfRange { index: usize, factors: usize },

    #[error("factors {i} and {j} have unequal dimensions ({dim_i} vs {dim_j})")]
    UnequalFactorDims {
        i: usize,
        j: usize,
        dim_i: usize,
        dim_j: usize,
    },

    #[error("matrix is not square: {len} entries for side {side}")]
    NotSquare { len: usize, side: usize },

    #[error("partial map is not inner-product preserving (gram residual {gram_residual:e}, dependency residual {dependency_residual:e})")]
    Infeasible {
        gram_residual: f64,
        dependency_residual: f64,
    },

    #[error("all constraint inputs are numerically zero")]
    DegenerateInputs,

    #[error("constructed operator failed verification ({what}: {deviation:e})")]
    CompletionFailed { what: &'static str, deviation: f64 },

    #[error("basis target must be 0 or 1, got {0}")]
    InvalidTarget(u8),

    #[error("malformed machine spec: {0}")]
    MalformedSpec(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),
}
