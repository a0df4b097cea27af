//! Error types shared across the crate.

use thiserror::Error;

use crate::scheme::SchemeKind;

/// Errors from exact rational arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    /// A rational was constructed with a zero denominator.
    #[error("denominator must not be zero")]
    ZeroDenominator,
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// `0^0` has no defined value.
    #[error("0^0 is indeterminate")]
    IndeterminatePower,
    /// The magnitude is too large for a double.
    #[error("magnitude exceeds the double-precision range")]
    FloatOverflow,
    /// The string is not a rational number.
    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),
}

/// Errors from scheme construction and weight evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("author count must be at least 1 (got {0})")]
    InvalidAuthorCount(usize),
    #[error("author index {j} is out of range 1..={k}")]
    AuthorIndexOutOfRange { j: usize, k: usize },
    #[error("scheme `{kind}` requires a weight-control parameter x")]
    MissingParameter { kind: SchemeKind },
    #[error("scheme `{kind}` does not take a parameter")]
    UnexpectedParameter { kind: SchemeKind },
    #[error("x = {x} is outside the domain of `{kind}` ({domain})")]
    ParameterOutOfRange {
        kind: SchemeKind,
        x: String,
        domain: &'static str,
    },
    #[error("the closed form is singular at x = 1; use the summation form")]
    ClosedFormAtOne,
    #[error("the first/last weight ratio is not defined at x = 1")]
    RatioAtOne,
    #[error("x = {x}: expected a finite positive parameter")]
    NonPositiveParameter { x: String },
    #[error("unknown scheme `{0}` (expected poly1, poly2, equal, geometric, arithmetic, or harmonic)")]
    UnknownScheme(String),
    #[error("{scheme} produced weights outside the positive double range at k = {k}")]
    NonRepresentable { scheme: String, k: usize },
}

/// A publication record that violates the corpus rules.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecordError {
    #[error("paper id is empty")]
    EmptyPaperId,
    #[error("author list is empty")]
    NoAuthors,
    #[error("author identifier is empty")]
    EmptyAuthor,
    #[error("author `{0}` appears more than once in the record")]
    DuplicateAuthor(String),
}

/// Errors from corpus parsing and scoring.
#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("row {row}: {cause}")]
    MalformedRow { row: u64, cause: String },
    #[error("row {row}: duplicate paper id `{id}`")]
    DuplicatePaperId { id: String, row: u64 },
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error(transparent)]
    Scheme(#[from] WeightError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
