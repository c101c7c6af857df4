use thiserror::Error;

/// Errors raised by the exact and numerical layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    ZeroPolynomialDivisor,

    #[error("division by zero scalar")]
    ZeroScalarDivisor,

    #[error("pole outside scalar field")]
    PoleOutsideField,

    #[error("series not normalized")]
    SeriesNotNormalized,

    #[error("exponent not formal-nilpotent")]
    ExponentNotNilpotent,

    #[error("series is not invertible: lowest known coefficient vanishes")]
    SeriesNotInvertible,

    #[error("unsupported representative: algebraic divisor meets 0")]
    UnsupportedRepresentative,

    #[error("zero rational part: a transalgebraic function must be nonzero")]
    ZeroRationalPart,

    #[error("region violates exclusion: sample {sample} is within {epsilon} of support point {point}")]
    RegionViolatesExclusion {
        sample: String,
        point: String,
        epsilon: f64,
    },

    #[error("root iteration did not converge after {iterations} iterations (residual {residual:e}, degree {degree})")]
    RootsDidNotConverge {
        iterations: usize,
        residual: f64,
        degree: usize,
    },

    #[error("empty point set")]
    EmptySet,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
