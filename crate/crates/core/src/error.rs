use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("zero vector has no direction, inverse or angle")]
    ZeroVector,
    #[error("similarity scale c² + d² is zero")]
    DegenerateScale,
    #[error("area denominator {0:e} is degenerate")]
    DegenerateDenominator(f64),
    #[error("lines are parallel (symp(u, v) = {0:e})")]
    ParallelLines(f64),
    #[error("line direction is the zero vector")]
    ZeroDirection,
    #[error("circle centers coincide")]
    CoincidentCenters,
    #[error("negative or non-finite radius {0}")]
    InvalidRadius(f64),
    #[error("slider length {0:e} degenerates, rocker angle undefined")]
    SingularPosition(f64),
    #[error("invalid step: {0}")]
    InvalidStep(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("non-finite component")]
    NonFinite,
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Caller supplied an invalid value.
    Usage,
    /// The geometry has no solution of the requested shape.
    Degenerate,
    /// A solver hit a numerical singularity.
    Singular,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InvalidStep(_)
            | Error::InvalidParameter(_)
            | Error::InvalidRadius(_)
            | Error::NonFinite => ErrorClass::Usage,
            Error::ZeroVector
            | Error::DegenerateScale
            | Error::DegenerateDenominator(_)
            | Error::ParallelLines(_)
            | Error::ZeroDirection
            | Error::CoincidentCenters => ErrorClass::Degenerate,
            Error::SingularPosition(_) => ErrorClass::Singular,
        }
    }
}
