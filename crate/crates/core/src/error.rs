use thiserror::Error;

use crate::field::FieldSpec;

/// Which argument of a two-argument operation was at fault.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arg {
    First,
    Second,
    Third,
}

impl std::fmt::Display for Arg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Arg::First => "first",
            Arg::Second => "second",
            Arg::Third => "third",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("zero denominator")]
    DenominatorZero,
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime in the supported range")]
    InvalidModulus(u64),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is degenerate (det B = 0)")]
    DegenerateForm,
    #[error("vectors are linearly dependent (scalar triple product is zero)")]
    DegenerateBasis,
    #[error("transform matrix is singular")]
    SingularTransform,
    #[error("vectors do not sum to zero")]
    NotATriangle,
    #[error("{0} vector is null")]
    NullVector(Arg),
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("projective points are identical")]
    IdenticalPoints,
    #[error("tripod is degenerate (representatives are linearly dependent)")]
    DegenerateTripod,
    #[error("{0} projective point is null")]
    NullPoint(Arg),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
}

impl Error {
    /// Whether the error reports degenerate geometric input (as opposed to
    /// malformed input or configuration).
    pub fn is_degenerate_input(&self) -> bool {
        matches!(
            self,
            Error::DegenerateForm
                | Error::DegenerateBasis
                | Error::SingularTransform
                | Error::NullVector(_)
                | Error::ZeroVector
                | Error::IdenticalPoints
                | Error::DegenerateTripod
                | Error::NullPoint(_)
        )
    }
}
