//! Numeric-layer errors.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum NumError {
    Domain { what: &'static str, value: f64 },
    NearPole { distance: f64 },
    NearThetaZero { magnitude: f64 },
    NoConsistentBranch { mismatch: f64 },
    PathThroughSingularity { at: f64 },
    QuadratureFailure { estimate: f64 },
    StiffnessFailure { step: f64 },
    CoveringPole { b: f64 },
    NonvanishingResidual { which: char, magnitude: f64 },
    RootCountMismatch { expected: usize, got: usize },
    Symbolic(lame_core::Error),
}

impl fmt::Display for NumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumError::Domain { what, value } => write!(f, "{what} out of range: {value}"),
            NumError::NearPole { distance } => {
                write!(f, "argument within {distance:e} of a lattice pole")
            }
            NumError::NearThetaZero { magnitude } => {
                write!(f, "theta function too small for a stable quotient: {magnitude:e}")
            }
            NumError::NoConsistentBranch { mismatch } => {
                write!(f, "no branch of alpha0 matches nu within tolerance ({mismatch:e})")
            }
            NumError::PathThroughSingularity { at } => {
                write!(f, "integration path passes a singularity near t = {at}")
            }
            NumError::QuadratureFailure { estimate } => {
                write!(f, "quadrature failed to converge (error estimate {estimate:e})")
            }
            NumError::StiffnessFailure { step } => {
                write!(f, "adaptive integrator step collapsed to {step:e}")
            }
            NumError::CoveringPole { b } => {
                write!(f, "covering-map denominator vanishes near B = {b}")
            }
            NumError::NonvanishingResidual { which, magnitude } => {
                write!(f, "recurrence residual {which}_-1 = {magnitude:e} did not vanish")
            }
            NumError::RootCountMismatch { expected, got } => {
                write!(f, "found {got} band edges, expected {expected}")
            }
            NumError::Symbolic(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for NumError {}

impl From<lame_core::Error> for NumError {
    fn from(e: lame_core::Error) -> Self {
        NumError::Symbolic(e)
    }
}

pub type NumResult<T> = std::result::Result<T, NumError>;
