use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("root finder did not reach the residual tolerance after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("invalid rational function: {0}")]
    InvalidFactored(String),

    #[error("reduced Newton map has degree {actual}, expected {expected}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("Newton map is degenerate (degree {degree})")]
    DegenerateMap { degree: usize },

    #[error("map has degree {degree}, at least {required} is required")]
    DegreeTooLow { degree: usize, required: usize },

    #[error("point is not a fixed point of the map")]
    NotFixed,

    #[error("fixed point is parabolic (multiplier 1)")]
    ParabolicPoint,

    #[error("integration loop of radius {radius} reaches another fixed point")]
    LoopTooLarge { radius: f64 },

    #[error("fixed points are not all simple")]
    NonSimpleFixedPoint,

    #[error("three-point data contains a repeated point")]
    DegenerateTriple,

    #[error("Mobius coefficients have vanishing determinant")]
    SingularMobius,

    #[error("Newton map is not quadratic (degree {degree})")]
    NotQuadratic { degree: usize },

    #[error("Newton map is not cubic (degree {degree})")]
    NotCubic { degree: usize },

    #[error("point is not a superattracting fixed point")]
    NotSuperattracting,

    #[error("need at least two finite roots or poles to normalize")]
    TooFewPoints,

    #[error("unsupported degree {degree}")]
    UnsupportedDegree { degree: usize },

    #[error("map is not conjugate to a polynomial")]
    NotPolynomialConjugate,

    #[error("invalid map: {0}")]
    InvalidMap(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
