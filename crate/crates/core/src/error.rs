//! Error type shared by the symbolic modules.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A resultant or discriminant was requested of a zero polynomial.
    ZeroPolynomial,
    /// Discriminant of a polynomial of degree below 2 in the chosen variable.
    DegreeTooLow { var: &'static str, degree: usize },
    /// A recurrence family was requested for an `ell` of the wrong parity.
    ParityMismatch { family: char, ell: u32 },
    /// Twisted / theta-twisted systems need a minimum `ell`.
    EllTooSmall { needed: u32, got: u32 },
    /// `symmetrize_over_e` received an expression that is not symmetric.
    NotSymmetric,
    /// An eliminated spectral polynomial missed its predicted degree.
    DegreeMismatch { what: &'static str, expected: usize, got: usize },
    /// Squarefree factor selection could not be resolved to the target degree.
    AmbiguousFactors { what: &'static str, target: usize },
    /// The three branch-value assemblies of `x0` disagree.
    GammaDisagreement,
    /// A rational-function division expected a polynomial quotient.
    NonpolynomialQuotient,
    /// The `nu^2` identity failed to cancel its position dependence.
    ResidualXDependence,
    /// Modulus `m` in {0, 1} degenerates the elliptic curve.
    DegenerateModulus,
    /// Division by zero in an exact scalar or quotient-ring step.
    DivisionByZero,
    /// Requested evaluation at a pole of a covering-map denominator.
    CoveringPole,
    /// Hermite-Krichever residuals failed to vanish.
    NonvanishingResidual { which: char, magnitude: f64 },
    /// A real-root count did not match the Sturm certificate.
    RootCountMismatch { expected: usize, got: usize },
    /// Polynomial serialization received an unsupported variable set.
    UnsupportedVariables,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::DegreeTooLow { var, degree } => {
                write!(f, "degree {degree} in {var} is too low")
            }
            Error::ParityMismatch { family, ell } => {
                write!(f, "family {family} is not defined for ell = {ell}")
            }
            Error::EllTooSmall { needed, got } => {
                write!(f, "ell = {got} below the minimum {needed} for this family")
            }
            Error::NotSymmetric => write!(f, "expression is not symmetric in e1, e2, e3"),
            Error::DegreeMismatch { what, expected, got } => {
                write!(f, "{what}: eliminated degree {got}, proposition predicts {expected}")
            }
            Error::AmbiguousFactors { what, target } => {
                write!(f, "{what}: no unique squarefree factor selection of degree {target}")
            }
            Error::GammaDisagreement => {
                write!(f, "x0 assemblies for the three branch values disagree")
            }
            Error::NonpolynomialQuotient => write!(f, "quotient is not a polynomial"),
            Error::ResidualXDependence => {
                write!(f, "nu^2 expression retains dependence on the curve point")
            }
            Error::DegenerateModulus => write!(f, "modulus m must avoid 0 and 1"),
            Error::DivisionByZero => write!(f, "exact division by zero"),
            Error::CoveringPole => write!(f, "evaluation at a pole of the covering map"),
            Error::NonvanishingResidual { which, magnitude } => {
                write!(f, "recurrence residual {which}_-1 of size {magnitude:e} did not vanish")
            }
            Error::RootCountMismatch { expected, got } => {
                write!(f, "found {got} real roots, Sturm count demands {expected}")
            }
            Error::UnsupportedVariables => {
                write!(f, "polynomial uses variables outside the serialization schema")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
