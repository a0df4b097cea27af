//! Weight vectors for the supported author-credit schemes.
//!
//! Every scheme distributes one unit of credit over the k authors of a
//! paper, first author first: weights are positive, strictly ordered by
//! rank unless the scheme is flat, and sum to exactly one.
//!
//! The polynomial family is controlled by a parameter x. Type I assigns
//! `w_j = x^(j-1) / (x^0 + ... + x^(k-1))` for 0 < x <= 1; type II assigns
//! `w_j = x^(k-j) / (x^0 + ... + x^(k-1))` for x >= 1. Both collapse to
//! equal weights 1/k at x = 1, and type II at x = 2 coincides with the
//! geometric scheme `w_j = 2^(k-j) / (2^k - 1)`. Arithmetic and harmonic
//! weights are comparison schemes from the bibliometrics literature:
//! `w_j = 2(k+1-j) / (k(k+1))` and `w_j = (1/j) / (1/1 + ... + 1/k)`.

use crate::error::WeightError;
use crate::rational::Rational;
use crate::scheme::{Param, PolyKind, SchemeKind, SchemeSpec};
use crate::value::Scalar;

/// A computed weight vector together with the scheme that produced it.
///
/// Weights are indexed by author rank: position 0 holds w_1, the first
/// author's share.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector<T> {
    scheme: SchemeSpec,
    weights: Vec<T>,
}

impl<T> WeightVector<T> {
    pub fn scheme(&self) -> &SchemeSpec {
        &self.scheme
    }

    pub fn author_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// The weight of the author at 1-based rank `j`.
    pub fn weight(&self, j: usize) -> Option<&T> {
        j.checked_sub(1).and_then(|i| self.weights.get(i))
    }

    /// The first author's weight.
    pub fn first(&self) -> &T {
        &self.weights[0]
    }

    /// The last author's weight.
    pub fn last(&self) -> &T {
        self.weights.last().expect("weight vectors are non-empty")
    }

    pub fn into_weights(self) -> Vec<T> {
        self.weights
    }
}

impl<T: Scalar> WeightVector<T> {
    /// Text renderings of all weights, first author first.
    pub fn rendered(&self) -> Vec<String> {
        self.weights.iter().map(Scalar::render).collect()
    }
}

fn check_author_count(k: usize) -> Result<(), WeightError> {
    if k == 0 {
        Err(WeightError::InvalidAuthorCount(k))
    } else {
        Ok(())
    }
}

/// Wraps computed weights after checking they are positive and finite.
///
/// Exact weights satisfy this by construction; in float mode the check
/// rejects parameters whose powers overflow double precision.
fn finish<T: Scalar>(scheme: SchemeSpec, weights: Vec<T>) -> Result<WeightVector<T>, WeightError> {
    let zero = T::zero();
    if weights.iter().any(|w| !w.is_finite() || *w <= zero) {
        return Err(WeightError::NonRepresentable {
            scheme: scheme.to_string(),
            k: weights.len(),
        });
    }
    Ok(WeightVector { scheme, weights })
}

/// `[x^0, x^1, ..., x^(k-1)]`.
fn powers<T: Scalar>(x: &T, k: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(k);
    let mut acc = T::one();
    for _ in 0..k {
        out.push(acc.clone());
        acc = acc * x.clone();
    }
    out
}

fn sum<T: Scalar>(values: &[T]) -> T {
    values.iter().cloned().fold(T::zero(), |acc, v| acc + v)
}

/// Type I polynomial weights: `w_j = x^(j-1) / sum_i x^(i-1)` for
/// 0 < x <= 1. Smaller x concentrates credit on earlier authors; x = 1 is
/// the equal-weight point.
pub fn polynomial_type1_weights<T: Scalar>(k: usize, x: T) -> Result<WeightVector<T>, WeightError> {
    let scheme = SchemeSpec::polynomial(PolyKind::TypeI, x.to_param())?;
    check_author_count(k)?;
    let powers = powers(&x, k);
    let total = sum(&powers);
    let weights = powers
        .iter()
        .map(|p| p.clone() / total.clone())
        .collect();
    finish(scheme, weights)
}

/// Type II polynomial weights: `w_j = x^(k-j) / sum_i x^(i-1)` for x >= 1.
/// Larger x concentrates credit on earlier authors; x = 1 is the
/// equal-weight point.
pub fn polynomial_type2_weights<T: Scalar>(k: usize, x: T) -> Result<WeightVector<T>, WeightError> {
    let scheme = SchemeSpec::polynomial(PolyKind::TypeII, x.to_param())?;
    check_author_count(k)?;
    let powers = powers(&x, k);
    let total = sum(&powers);
    let weights = powers
        .iter()
        .rev()
        .map(|p| p.clone() / total.clone())
        .collect();
    finish(scheme, weights)
}

/// Equal weights: every author receives 1/k.
pub fn equal_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    check_author_count(k)?;
    let share = T::one() / T::from_count(k);
    finish(SchemeSpec::equal(), vec![share; k])
}

/// Geometric weights `w_j = 2^(k-j) / (2^k - 1)`: each author receives
/// half the previous author's share, scaled to sum to one.
///
/// Computed from its own closed form rather than by delegating to
/// [`polynomial_type2_weights`] at x = 2, so the documented coincidence of
/// the two can be cross-checked instead of being true by definition.
pub fn geometric_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    check_author_count(k)?;
    let two = T::from_count(2);
    let denom = two.powi(k as u32) - T::one();
    let weights = (1..=k)
        .map(|j| two.powi((k - j) as u32) / denom.clone())
        .collect();
    finish(SchemeSpec::geometric(), weights)
}

/// Arithmetic weights `w_j = 2(k+1-j) / (k(k+1))`: shares decline linearly
/// with rank.
pub fn arithmetic_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    check_author_count(k)?;
    let total = T::from_count(k * (k + 1) / 2);
    let weights = (1..=k)
        .map(|j| T::from_count(k + 1 - j) / total.clone())
        .collect();
    finish(SchemeSpec::arithmetic(), weights)
}

/// Harmonic weights `w_j = (1/j) / (1/1 + ... + 1/k)`.
pub fn harmonic_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    check_author_count(k)?;
    let reciprocals: Vec<T> = (1..=k).map(|j| T::one() / T::from_count(j)).collect();
    let total = sum(&reciprocals);
    let weights = reciprocals
        .iter()
        .map(|r| r.clone() / total.clone())
        .collect();
    finish(SchemeSpec::harmonic(), weights)
}

/// The single weight `w_j` of a polynomial scheme, evaluated in closed form
/// without summing the power series.
///
/// Type II: `w_j = x^(k-j) (x - 1) / (x^k - 1)`. Type I:
/// `w_j = x^(j-1) (1 - x) / (1 - x^k)`. Both are singular at x = 1, where
/// the summation form must be used instead; that case is an error here.
pub fn polynomial_weight_closed_form<T: Scalar>(
    k: usize,
    j: usize,
    x: T,
    kind: PolyKind,
) -> Result<T, WeightError> {
    check_author_count(k)?;
    if j < 1 || j > k {
        return Err(WeightError::AuthorIndexOutOfRange { j, k });
    }
    SchemeSpec::polynomial(kind, x.to_param())?;
    let one = T::one;
    if x == one() {
        return Err(WeightError::ClosedFormAtOne);
    }
    let (numer, denom) = match kind {
        PolyKind::TypeII => (
            x.powi((k - j) as u32) * (x.clone() - one()),
            x.powi(k as u32) - one(),
        ),
        PolyKind::TypeI => (
            x.powi((j - 1) as u32) * (one() - x.clone()),
            one() - x.powi(k as u32),
        ),
    };
    Ok(numer / denom)
}

/// The ratio of the first author's weight to the last author's.
///
/// For type II this equals `x^(k-1)`; for type I, `(1/x)^(k-1)`. The ratio
/// is computed from the weight vector itself, so those identities stay
/// checkable. x = 1 is rejected: the ratio degenerates to 1 and carries no
/// information about the decay.
pub fn first_last_ratio<T: Scalar>(k: usize, x: T, kind: PolyKind) -> Result<T, WeightError> {
    let vector = match kind {
        PolyKind::TypeI => polynomial_type1_weights(k, x.clone())?,
        PolyKind::TypeII => polynomial_type2_weights(k, x.clone())?,
    };
    if x == T::one() {
        return Err(WeightError::RatioAtOne);
    }
    Ok(vector.first().clone() / vector.last().clone())
}

/// The parameter of the mirrored polynomial scheme: type I at `1/x`
/// produces the same weights as type II at `x`, and vice versa. Requires
/// x > 0.
pub fn dual_parameter<T: Scalar>(x: T) -> Result<T, WeightError> {
    if !x.is_finite() || x <= T::zero() {
        return Err(WeightError::NonPositiveParameter { x: x.render() });
    }
    Ok(T::one() / x)
}

/// Weights computed under either arithmetic mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Weights {
    Exact(WeightVector<Rational>),
    Real(WeightVector<f64>),
}

impl Weights {
    pub fn scheme(&self) -> &SchemeSpec {
        match self {
            Weights::Exact(v) => v.scheme(),
            Weights::Real(v) => v.scheme(),
        }
    }

    pub fn author_count(&self) -> usize {
        match self {
            Weights::Exact(v) => v.author_count(),
            Weights::Real(v) => v.author_count(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Weights::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&WeightVector<Rational>> {
        match self {
            Weights::Exact(v) => Some(v),
            Weights::Real(_) => None,
        }
    }

    pub fn as_real(&self) -> Option<&WeightVector<f64>> {
        match self {
            Weights::Real(v) => Some(v),
            Weights::Exact(_) => None,
        }
    }

    /// Text renderings of all weights, first author first.
    pub fn rendered(&self) -> Vec<String> {
        match self {
            Weights::Exact(v) => v.rendered(),
            Weights::Real(v) => v.rendered(),
        }
    }

    /// JSON renderings of all weights, first author first.
    pub fn to_json_weights(&self) -> Vec<serde_json::Value> {
        match self {
            Weights::Exact(v) => v.weights().iter().map(Scalar::to_json).collect(),
            Weights::Real(v) => v.weights().iter().map(Scalar::to_json).collect(),
        }
    }
}

/// Computes the weight vector for `spec` and `k` authors.
///
/// Exact parameters and parameterless schemes run in exact arithmetic;
/// a floating-point parameter switches the whole computation to `f64`.
pub fn compute_weights(spec: &SchemeSpec, k: usize) -> Result<Weights, WeightError> {
    match spec.x() {
        Some(Param::Real(v)) => Ok(Weights::Real(weights_for_kind(spec.kind(), Some(*v), k)?)),
        Some(Param::Exact(r)) => Ok(Weights::Exact(weights_for_kind(
            spec.kind(),
            Some(r.clone()),
            k,
        )?)),
        None => Ok(Weights::Exact(weights_for_kind(spec.kind(), None, k)?)),
    }
}

/// Dispatches to the scheme's weight function in one arithmetic mode.
pub(crate) fn weights_for_kind<T: Scalar>(
    kind: SchemeKind,
    x: Option<T>,
    k: usize,
) -> Result<WeightVector<T>, WeightError> {
    let require_x = || x.clone().ok_or(WeightError::MissingParameter { kind });
    match kind {
        SchemeKind::PolynomialTypeI => polynomial_type1_weights(k, require_x()?),
        SchemeKind::PolynomialTypeII => polynomial_type2_weights(k, require_x()?),
        SchemeKind::Equal => equal_weights(k),
        SchemeKind::Geometric => geometric_weights(k),
        SchemeKind::Arithmetic => arithmetic_weights(k),
        SchemeKind::Harmonic => harmonic_weights(k),
    }
}
