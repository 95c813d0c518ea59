//! Error type shared by every module.

use thiserror::Error;

/// Domain errors. Each variant maps to a stable `error_kind` string used by the
/// JSON front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("enumeration of {size} items exceeds the cap {cap}")]
    TooLarge { size: u128, cap: u64 },
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("ideal is not invariant under the involution")]
    NotStarInvariant,
    #[error("quotient is not one of the supported ring families")]
    UnsupportedQuotient,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("matrix is not in the group: {0}")]
    NotInGroup(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("search space of {size} exceeds the cap {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring does not have a unique minimal ideal")]
    NoUniqueMinimalIdeal,
    #[error("character is not primitive")]
    NotPrimitive,
    #[error("bad vector: {0}")]
    BadVector(String),
    #[error("not a symplectic pair")]
    NotSymplecticPair,
    #[error("matrix is not in SL(2,R)")]
    NotInSL2R,
    #[error("matrix is not special unitary")]
    NotInSU,
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("vectors do not form a symplectic set")]
    NotSymplecticSet,
    #[error("vector is not a basis vector")]
    NotBasisVector,
    #[error("vector does not have length zero")]
    NonzeroLength,
    #[error("element does not have norm one")]
    NotNormOne,
    #[error("norm-one element is not reachable in the ramified case")]
    RamifiedObstruction,
    #[error("matrix is not unitary")]
    NotInU,
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

impl Error {
    /// Stable identifier used in JSON responses.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::RingMismatch => "RingMismatch",
            Error::NotAUnit(_) => "NotAUnit",
            Error::TooLarge { .. } => "TooLarge",
            Error::ImproperIdeal => "ImproperIdeal",
            Error::NotStarInvariant => "NotStarInvariant",
            Error::UnsupportedQuotient => "UnsupportedQuotient",
            Error::DimMismatch(_) => "DimMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::BadParameter(_) => "BadParameter",
            Error::NotInGroup(_) => "NotInGroup",
            Error::NoSolution(_) => "NoSolution",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::DivisionByZero => "DivisionByZero",
            Error::NoUniqueMinimalIdeal => "NoUniqueMinimalIdeal",
            Error::NotPrimitive => "NotPrimitive",
            Error::BadVector(_) => "BadVector",
            Error::NotSymplecticPair => "NotSymplecticPair",
            Error::NotInSL2R => "NotInSL2R",
            Error::NotInSU => "NotInSU",
            Error::NotSymplectic => "NotSymplectic",
            Error::NotSymplecticSet => "NotSymplecticSet",
            Error::NotBasisVector => "NotBasisVector",
            Error::NonzeroLength => "NonzeroLength",
            Error::NotNormOne => "NotNormOne",
            Error::RamifiedObstruction => "RamifiedObstruction",
            Error::NotInU => "NotInU",
            Error::SchemaError(_) => "SchemaError",
            Error::UnknownSuite(_) => "UnknownSuite",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default enumeration cap, overridable through `MAX_ENUM`.
pub const DEFAULT_MAX_ENUM: u64 = 1_000_000;

/// Reads the enumeration cap from the `MAX_ENUM` environment variable.
pub fn max_enum_from_env() -> u64 {
    std::env::var("MAX_ENUM")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ENUM)
}

pub(crate) fn check_cap(size: u128, cap: u64) -> Result<()> {
    if size > cap as u128 {
        Err(Error::TooLarge { size, cap })
    } else {
        Ok(())
    }
}
