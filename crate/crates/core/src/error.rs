use alloc::string::String;

use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings: {0}")]
    RingMismatch(String),
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooLow { target: u32, degree: u32 },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable '{name}' at position {position}")]
    UnknownVariable { position: usize, name: char },
    #[error("quotient by the zero ideal")]
    ZeroQuotient,
    #[error("saturation did not stabilize within {cap} quotient steps")]
    SaturationDiverged { cap: u32 },
    #[error("ideal is not zero-dimensional in the projective plane")]
    NotZeroDimensional,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("curve is not reduced: repeated factor {factor}")]
    NotReduced { factor: String },
    #[error("characteristic {characteristic} divides the degree {degree}")]
    BadCharacteristic { characteristic: u32, degree: u32 },
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error("a constant does not define a curve")]
    ConstantPolynomial,
    #[error("invalid choice of minimal syzygy: {0}")]
    InvalidEpsilon(String),
    #[error("module vector is not homogeneous")]
    NotHomogeneousVector,
    #[error("syzygy module has fewer than two minimal generators")]
    NoSyzygyQuotient,
    #[error("presentation kernel is empty or has rank above one")]
    DegenerateKernel,
    #[error("local quotient has infinite dimension")]
    InfiniteLocalDimension,
    #[error("classification cross-check failed: {0}")]
    InconsistentClassification(String),
    #[error("vector is not a syzygy of the Jacobian ideal")]
    NotASyzygy,
    #[error("all coordinates of a projective point vanish")]
    ZeroPoint,
    #[error("no generators given")]
    EmptyInput,
    #[error("dimension did not stabilize: {0}")]
    NotStabilized(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
