//! Author-credit allocation for multi-author publications.
//!
//! The crate computes per-author weight vectors under six schemes: a
//! polynomial family controlled by a decay parameter x (type I for
//! 0 < x <= 1, type II for x >= 1), plus equal, geometric, arithmetic, and
//! harmonic weights. It scores publication corpora by splitting one unit of
//! credit per paper across its authors, and ships an invariant suite that
//! re-derives the algebraic properties the schemes are expected to satisfy.
//!
//! Arithmetic runs in one of two modes, decided by the parameter: exact
//! rationals end to end by default, or `f64` when the parameter itself is a
//! float. Exact results render as reduced fractions; float results carry 12
//! significant digits.
//!
//! ```
//! use paperweight::{compute_weights, PolyKind, SchemeSpec};
//!
//! let spec = SchemeSpec::polynomial(PolyKind::TypeII, "2".parse()?)?;
//! let weights = compute_weights(&spec, 3)?;
//! assert_eq!(weights.rendered(), ["4/7", "2/7", "1/7"]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod corpus;
pub mod error;
pub mod rational;
pub mod scheme;
pub mod value;
pub mod verify;
pub mod weights;

pub use corpus::{
    parse_corpus, score_corpus, AuthorCreditReport, CreditEntry, CreditReport, PublicationRecord,
};
pub use error::{CorpusError, NumericError, RecordError, WeightError};
pub use rational::Rational;
pub use scheme::{Param, PolyKind, SchemeKind, SchemeSpec};
pub use value::{format_significant, Scalar};
pub use verify::{
    run_invariant_suite, CheckOutcome, VerifyReport, FLOAT_MATCH_TOLERANCE,
    FLOAT_NORMALIZATION_TOLERANCE, FLOAT_RATIO_TOLERANCE,
};
pub use weights::{
    arithmetic_weights, compute_weights, dual_parameter, equal_weights, first_last_ratio,
    geometric_weights, harmonic_weights, polynomial_type1_weights, polynomial_type2_weights,
    polynomial_weight_closed_form, WeightVector, Weights,
};
