//! A self-check suite for the algebraic properties the schemes claim.
//!
//! Each check sweeps author counts 1..=k_max and a caller-supplied list of
//! parameter values, re-deriving a property from freshly computed weight
//! vectors: normalization, rank monotonicity, the equal-weight point at
//! x = 1, the coincidence of geometric weights with type II at x = 2, the
//! type I/type II duality under x -> 1/x, and the first-to-last ratio law.
//! A failing check carries the first counterexample it found.

use num_traits::{One, Zero};

use crate::error::WeightError;
use crate::rational::Rational;
use crate::scheme::{Param, PolyKind, SchemeSpec};
use crate::value::{format_significant, Scalar};
use crate::weights::{
    compute_weights, equal_weights, first_last_ratio, geometric_weights,
    polynomial_type1_weights, polynomial_type2_weights, weights_for_kind, Weights,
};

/// Absolute tolerance on `|sum - 1|` for float-mode weight vectors.
pub const FLOAT_NORMALIZATION_TOLERANCE: f64 = 1e-12;

/// Absolute tolerance for elementwise float-mode weight comparisons.
pub const FLOAT_MATCH_TOLERANCE: f64 = 1e-12;

/// Relative tolerance for the float-mode first/last ratio law.
pub const FLOAT_RATIO_TOLERANCE: f64 = 1e-9;

/// The result of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: false,
            detail,
        }
    }
}

/// The outcomes of a full invariant run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn checks(&self) -> &[CheckOutcome] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Runs every check for author counts 1..=k_max and the given polynomial
/// parameters (exact parameters are checked exactly, float parameters
/// within the published tolerances).
///
/// `k_max` must be at least 1 and every parameter finite and positive;
/// parameters at exactly 1 exercise the trivial fixed points of the
/// duality and are excluded from the ratio law.
pub fn run_invariant_suite(k_max: usize, params: &[Param]) -> Result<VerifyReport, WeightError> {
    if k_max == 0 {
        return Err(WeightError::InvalidAuthorCount(0));
    }
    for p in params {
        if !p.is_finite() || !p.gt_zero() {
            return Err(WeightError::NonPositiveParameter { x: p.render() });
        }
    }
    Ok(VerifyReport {
        checks: vec![
            check_normalization(k_max, params),
            check_monotonicity(k_max, params),
            check_equal_weight_limit(k_max),
            check_geometric_specialization(k_max),
            check_duality(k_max, params),
            check_ratio_law(k_max, params),
        ],
    })
}

/// The polynomial kinds whose domain contains `p`; both at x = 1.
fn poly_kinds(p: &Param) -> Vec<PolyKind> {
    match (p.le_one(), p.ge_one()) {
        (true, true) => vec![PolyKind::TypeI, PolyKind::TypeII],
        (true, false) => vec![PolyKind::TypeI],
        _ => vec![PolyKind::TypeII],
    }
}

fn poly_weights(kind: PolyKind, p: &Param, k: usize) -> Result<Weights, WeightError> {
    compute_weights(&SchemeSpec::polynomial(kind, p.clone())?, k)
}

const PARAMETERLESS: [crate::scheme::SchemeKind; 4] = [
    crate::scheme::SchemeKind::Equal,
    crate::scheme::SchemeKind::Geometric,
    crate::scheme::SchemeKind::Arithmetic,
    crate::scheme::SchemeKind::Harmonic,
];

fn check_normalization(k_max: usize, params: &[Param]) -> CheckOutcome {
    let name = "normalization";
    for k in 1..=k_max {
        for kind in PARAMETERLESS {
            let vector = match weights_for_kind::<Rational>(kind, None, k) {
                Ok(v) => v,
                Err(e) => return CheckOutcome::fail(name, format!("k = {k}, {kind}: {e}")),
            };
            if let Some(detail) = exact_sum_is_one(vector.weights()) {
                return CheckOutcome::fail(name, format!("k = {k}, scheme = {kind}: {detail}"));
            }
        }
        for p in params {
            for kind in poly_kinds(p) {
                let counterexample = match poly_weights(kind, p, k) {
                    Ok(Weights::Exact(v)) => exact_sum_is_one(v.weights()),
                    Ok(Weights::Real(v)) => float_sum_is_one(v.weights()),
                    Err(e) => Some(e.to_string()),
                };
                if let Some(detail) = counterexample {
                    return CheckOutcome::fail(
                        name,
                        format!("k = {k}, scheme = {kind}, x = {p}: {detail}"),
                    );
                }
            }
        }
    }
    CheckOutcome::pass(
        name,
        format!(
            "all weight vectors sum to 1 for k = 1..{k_max} ({} parameter value(s))",
            params.len()
        ),
    )
}

fn check_monotonicity(k_max: usize, params: &[Param]) -> CheckOutcome {
    let name = "monotonicity";
    for k in 1..=k_max {
        for kind in PARAMETERLESS {
            let vector = match weights_for_kind::<Rational>(kind, None, k) {
                Ok(v) => v,
                Err(e) => return CheckOutcome::fail(name, format!("k = {k}, {kind}: {e}")),
            };
            let counterexample = if kind == crate::scheme::SchemeKind::Equal {
                all_equal(vector.weights())
            } else {
                strictly_decreasing(vector.weights())
            };
            if let Some(detail) = counterexample {
                return CheckOutcome::fail(name, format!("k = {k}, scheme = {kind}: {detail}"));
            }
        }
        for p in params {
            for kind in poly_kinds(p) {
                let flat = p.is_one();
                let counterexample = match poly_weights(kind, p, k) {
                    Ok(Weights::Exact(v)) if flat => all_equal(v.weights()),
                    Ok(Weights::Exact(v)) => strictly_decreasing(v.weights()),
                    Ok(Weights::Real(v)) if flat => all_equal(v.weights()),
                    Ok(Weights::Real(v)) => strictly_decreasing(v.weights()),
                    Err(e) => Some(e.to_string()),
                };
                if let Some(detail) = counterexample {
                    return CheckOutcome::fail(
                        name,
                        format!("k = {k}, scheme = {kind}, x = {p}: {detail}"),
                    );
                }
            }
        }
    }
    CheckOutcome::pass(
        name,
        format!("weights decrease strictly with rank (equal only at x = 1) for k = 1..{k_max}"),
    )
}

fn check_equal_weight_limit(k_max: usize) -> CheckOutcome {
    let name = "equal-weight-limit";
    for k in 1..=k_max {
        let one = Rational::one();
        let type1 = polynomial_type1_weights(k, one.clone()).expect("x = 1 is in both domains");
        let type2 = polynomial_type2_weights(k, one).expect("x = 1 is in both domains");
        let equal = equal_weights::<Rational>(k).expect("k >= 1");
        for (label, vector) in [("poly1", &type1), ("poly2", &type2)] {
            if vector.weights() != equal.weights() {
                return CheckOutcome::fail(
                    name,
                    format!(
                        "k = {k}: {label} at x = 1 is {:?}, equal weights are {:?}",
                        vector.rendered(),
                        equal.rendered()
                    ),
                );
            }
        }
    }
    CheckOutcome::pass(
        name,
        format!("poly1 and poly2 at x = 1 reproduce equal weights for k = 1..{k_max}"),
    )
}

fn check_geometric_specialization(k_max: usize) -> CheckOutcome {
    let name = "geometric-specialization";
    for k in 1..=k_max {
        let type2 = polynomial_type2_weights(k, Rational::from_integer(2)).expect("2 >= 1");
        let geometric = geometric_weights::<Rational>(k).expect("k >= 1");
        if type2.weights() != geometric.weights() {
            return CheckOutcome::fail(
                name,
                format!(
                    "k = {k}: poly2 at x = 2 is {:?}, geometric is {:?}",
                    type2.rendered(),
                    geometric.rendered()
                ),
            );
        }
    }
    CheckOutcome::pass(
        name,
        format!("poly2 at x = 2 reproduces geometric weights for k = 1..{k_max}"),
    )
}

fn check_duality(k_max: usize, params: &[Param]) -> CheckOutcome {
    let name = "duality";
    let mut trivial = false;
    for p in params {
        if p.is_one() {
            trivial = true;
            continue;
        }
        for k in 1..=k_max {
            let counterexample = match p {
                Param::Exact(r) => {
                    let q = if r >= &Rational::one() {
                        r.clone()
                    } else {
                        r.recip().expect("positive parameter")
                    };
                    let inverse = q.recip().expect("positive parameter");
                    match (
                        polynomial_type1_weights(k, inverse),
                        polynomial_type2_weights(k, q.clone()),
                    ) {
                        (Ok(lhs), Ok(rhs)) => {
                            elementwise_equal(lhs.weights(), rhs.weights()).map(|detail| {
                                format!("k = {k}, q = {q}: {detail}")
                            })
                        }
                        (Err(e), _) | (_, Err(e)) => Some(format!("k = {k}, q = {q}: {e}")),
                    }
                }
                Param::Real(v) => {
                    let q = if *v >= 1.0 { *v } else { 1.0 / *v };
                    match (
                        polynomial_type1_weights(k, 1.0 / q),
                        polynomial_type2_weights(k, q),
                    ) {
                        (Ok(lhs), Ok(rhs)) => {
                            elementwise_close(lhs.weights(), rhs.weights()).map(|detail| {
                                format!("k = {k}, q = {}: {detail}", format_significant(q))
                            })
                        }
                        (Err(e), _) | (_, Err(e)) => {
                            Some(format!("k = {k}, q = {}: {e}", format_significant(q)))
                        }
                    }
                }
            };
            if let Some(detail) = counterexample {
                return CheckOutcome::fail(name, detail);
            }
        }
    }
    let mut detail = format!("poly1 at 1/q matches poly2 at q for k = 1..{k_max}");
    if trivial {
        detail.push_str("; x = 1 is its own dual (trivial fixed point)");
    }
    CheckOutcome::pass(name, detail)
}

fn check_ratio_law(k_max: usize, params: &[Param]) -> CheckOutcome {
    let name = "ratio-law";
    let mut excluded = false;
    for p in params {
        if p.is_one() {
            excluded = true;
            continue;
        }
        for k in 1..=k_max {
            for kind in poly_kinds(p) {
                let counterexample = match p {
                    Param::Exact(r) => {
                        let base = match kind {
                            PolyKind::TypeII => r.clone(),
                            PolyKind::TypeI => r.recip().expect("positive parameter"),
                        };
                        let expected = base.pow((k - 1) as u32).expect("nonzero base");
                        match first_last_ratio(k, r.clone(), kind) {
                            Ok(ratio) => ratio_matches(&ratio, &expected),
                            Err(e) => Some(e.to_string()),
                        }
                    }
                    Param::Real(v) => {
                        let base = match kind {
                            PolyKind::TypeII => *v,
                            PolyKind::TypeI => 1.0 / *v,
                        };
                        let expected = base.powi(k as i32 - 1);
                        match first_last_ratio(k, *v, kind) {
                            Ok(ratio)
                                if (ratio - expected).abs()
                                    <= FLOAT_RATIO_TOLERANCE * expected.abs() =>
                            {
                                None
                            }
                            Ok(ratio) => Some(format!(
                                "w_1/w_k = {}, expected {}",
                                format_significant(ratio),
                                format_significant(expected)
                            )),
                            Err(e) => Some(e.to_string()),
                        }
                    }
                };
                if let Some(detail) = counterexample {
                    return CheckOutcome::fail(
                        name,
                        format!("k = {k}, scheme = {kind}, x = {p}: {detail}"),
                    );
                }
            }
        }
    }
    let mut detail =
        format!("w_1/w_k follows the power law in the decay base for k = 1..{k_max}");
    if excluded {
        detail.push_str("; x = 1 excluded (ratio degenerates to 1)");
    }
    CheckOutcome::pass(name, detail)
}

fn ratio_matches(ratio: &Rational, expected: &Rational) -> Option<String> {
    (ratio != expected).then(|| format!("w_1/w_k = {ratio}, expected {expected}"))
}

fn exact_sum_is_one(weights: &[Rational]) -> Option<String> {
    let total = weights
        .iter()
        .cloned()
        .fold(Rational::zero(), |acc, w| acc + w);
    (total != Rational::one()).then(|| format!("sum = {total}"))
}

fn float_sum_is_one(weights: &[f64]) -> Option<String> {
    let total: f64 = weights.iter().sum();
    ((total - 1.0).abs() > FLOAT_NORMALIZATION_TOLERANCE)
        .then(|| format!("sum = {}", format_significant(total)))
}

fn strictly_decreasing<T: Scalar>(weights: &[T]) -> Option<String> {
    for (i, pair) in weights.windows(2).enumerate() {
        if pair[0] <= pair[1] {
            return Some(format!(
                "w_{} = {} does not exceed w_{} = {}",
                i + 1,
                pair[0].render(),
                i + 2,
                pair[1].render()
            ));
        }
    }
    None
}

fn all_equal<T: Scalar>(weights: &[T]) -> Option<String> {
    for (i, pair) in weights.windows(2).enumerate() {
        if pair[0] != pair[1] {
            return Some(format!(
                "w_{} = {} differs from w_{} = {}",
                i + 1,
                pair[0].render(),
                i + 2,
                pair[1].render()
            ));
        }
    }
    None
}

fn elementwise_equal(lhs: &[Rational], rhs: &[Rational]) -> Option<String> {
    for (j, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        if a != b {
            return Some(format!("j = {}: {a} vs {b}", j + 1));
        }
    }
    None
}

fn elementwise_close(lhs: &[f64], rhs: &[f64]) -> Option<String> {
    for (j, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        if (a - b).abs() > FLOAT_MATCH_TOLERANCE {
            return Some(format!(
                "j = {}: {} vs {}",
                j + 1,
                format_significant(*a),
                format_significant(*b)
            ));
        }
    }
    None
}
