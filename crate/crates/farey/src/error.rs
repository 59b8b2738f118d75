use thiserror::Error;

/// Failure modes of the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("BothZero: (0,0) is not a point of the projective line")]
    BothZero,
    #[error("NotCoprime: {0} and {1} share a factor")]
    NotCoprime(String, String),
    #[error("NotIrrational: {0} is a perfect square")]
    NotIrrational(String),
    #[error("ZeroDenominator: surd denominator must be nonzero")]
    ZeroDenominator,
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("OddLength: regular word must have even length, got {0}")]
    OddLength(usize),
    #[error("EntryBelowOne: entry {0} is not positive")]
    EntryBelowOne(String),
    #[error("EntryBelowTwo: entry {0} is below 2")]
    EntryBelowTwo(String),
    #[error("NotUnimodular: determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("InvalidDissection: {0}")]
    InvalidDissection(String),
    #[error("Not3d: a cell has {0} vertices, not a multiple of 3")]
    Not3d(usize),
    #[error("NotTotallyPositive: {0}")]
    NotTotallyPositive(String),
    #[error("NotASolution: M(c) is not ±Id")]
    NotASolution,
    #[error("NotAPolygon: {0}")]
    NotAPolygon(String),
    #[error("NonIntegerIndex: at vertex {0}")]
    NonIntegerIndex(usize),
    #[error("NotPositive: {0}")]
    NotPositive(String),
    #[error("BadIndices: {0}")]
    BadIndices(String),
    #[error("WrongSign: word classifies as {0}")]
    WrongSign(String),
    #[error("IsIdentity: ±Id has the empty presentation")]
    IsIdentity,
    #[error("NotHyperbolic: |trace| = {0} < 3")]
    NotHyperbolic(String),
    #[error("WrongShape: {0}")]
    WrongShape(String),
    #[error("Parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
