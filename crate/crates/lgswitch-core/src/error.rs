//! Error type shared by every module of the crate.

use core::fmt;

/// Everything that can go wrong when assembling or evaluating a scenario.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands had incompatible dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// A matrix expected to be Hermitian was not (max asymmetry reported).
    NotHermitian { deviation: f64 },
    /// A vector expected to be normalized was not.
    NotNormalized { norm: f64 },
    /// A pair of basis vectors was not orthonormal.
    NotOrthonormal { deviation: f64 },
    /// A matrix failed the density-operator checks (unit trace, positivity).
    NotDensityMatrix { reason: &'static str },
    /// An operation required a pure state.
    NotPure,
    /// Observable Bloch vector had (near-)zero length.
    ZeroBlochVector,
    /// Unsharpness parameter outside (0, 1].
    InvalidLambda { lambda: f64 },
    /// Measurement-time index outside {1, 2, 3}.
    InvalidTimeIndex { index: usize },
    /// Pair indices must satisfy i < j.
    IndexOrder { i: usize, j: usize },
    /// Measurement times must be nondecreasing.
    UnorderedTimes,
    /// Post-selection overlap vanished; the requested quantity is undefined.
    VanishingOverlap,
    /// The switch readout identity is only established for projector channels.
    NotProjective { deviation: f64 },
    /// Kraus family does not resolve the identity.
    IncompleteKraus { deviation: f64 },
    /// The switch readout requires the reference input state.
    WrongReferenceInput { overlap: f64 },
    /// Splitter convention rows do not form a unitary.
    NotUnitaryConvention { deviation: f64 },
    /// Search space has no free dimension.
    EmptySearchSpace,
    /// A free dimension has lo >= hi.
    InvalidBounds { lo: f64, hi: f64 },
    /// Grid resolution must be at least 2 per free dimension.
    InvalidResolution { resolution: usize },
    /// Survey sample count must be at least 1.
    InvalidSampleCount,
    /// Search start point does not match the space's free dimensions.
    BadStartPoint { expected: usize, got: usize },
    /// An outcome label was not +1 or -1.
    InvalidOutcome { value: i32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (deviation {deviation:e})")
            }
            Error::NotNormalized { norm } => {
                write!(f, "vector is not normalized (norm {norm})")
            }
            Error::NotOrthonormal { deviation } => {
                write!(f, "basis is not orthonormal (deviation {deviation:e})")
            }
            Error::NotDensityMatrix { reason } => {
                write!(f, "not a density matrix: {reason}")
            }
            Error::NotPure => write!(f, "operation requires a pure state"),
            Error::ZeroBlochVector => write!(f, "Bloch vector has zero length"),
            Error::InvalidLambda { lambda } => {
                write!(f, "unsharpness {lambda} outside (0, 1]")
            }
            Error::InvalidTimeIndex { index } => {
                write!(f, "measurement index {index} outside 1..=3")
            }
            Error::IndexOrder { i, j } => {
                write!(f, "pair indices must satisfy i < j, got ({i}, {j})")
            }
            Error::UnorderedTimes => write!(f, "measurement times must be nondecreasing"),
            Error::VanishingOverlap => {
                write!(f, "post-selection overlap vanished; value undefined")
            }
            Error::NotProjective { deviation } => {
                write!(f, "channel is not projective (deviation {deviation:e})")
            }
            Error::IncompleteKraus { deviation } => {
                write!(f, "Kraus family incomplete (deviation {deviation:e})")
            }
            Error::WrongReferenceInput { overlap } => {
                write!(
                    f,
                    "readout requires the |+> reference input (overlap {overlap})"
                )
            }
            Error::NotUnitaryConvention { deviation } => {
                write!(f, "splitter rows are not unitary (deviation {deviation:e})")
            }
            Error::EmptySearchSpace => write!(f, "search space has no free dimension"),
            Error::InvalidBounds { lo, hi } => {
                write!(f, "invalid bounds: lo {lo} >= hi {hi}")
            }
            Error::InvalidResolution { resolution } => {
                write!(f, "grid resolution {resolution} < 2")
            }
            Error::InvalidSampleCount => write!(f, "survey needs at least one sample"),
            Error::BadStartPoint { expected, got } => {
                write!(f, "start point has {got} coordinates, space has {expected}")
            }
            Error::InvalidOutcome { value } => {
                write!(f, "outcome label {value} is not +1 or -1")
            }
        }
    }
}
