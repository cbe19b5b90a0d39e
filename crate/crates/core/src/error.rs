use alloc::string::String;

/// Errors raised by the algebra core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("polynomial has an off-diagonal term u^{a} v^{b}")]
    NotDiagonal { a: u32, b: u32 },
    #[error("inner series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series must have constant term 1")]
    ConstantTermNotOne,
    #[error("arity-one part must be exactly p1")]
    NotIdentityLeading,
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("coefficient is not invertible")]
    NotInvertible,
    #[error("truncation {available} is insufficient, need {needed}")]
    Truncation { needed: usize, available: usize },
    #[error("missing trace for class {0}")]
    MissingClass(String),
    #[error("fixture {name}: {reason}")]
    Fixture { name: String, reason: String },
    #[error("wrong variant: expected {expected}, found {found}")]
    WrongVariant { expected: &'static str, found: &'static str },
    #[error("guard failed: {0}")]
    Guard(&'static str),
    #[error("enumeration cap exceeded: m + n = {0} > 7")]
    EnumerationCap(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
