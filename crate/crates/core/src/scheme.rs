//! Scheme selection and parameter handling.
//!
//! A [`SchemeSpec`] pairs a [`SchemeKind`] with its weight-control parameter
//! and is validated at construction, so downstream code never sees a
//! polynomial scheme without an in-domain `x` or a parameterless scheme with
//! one. The parameter itself is a [`Param`]: either an exact rational, which
//! keeps every later computation exact, or a double, which switches the
//! pipeline to floating point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{NumericError, WeightError};
use crate::rational::Rational;
use crate::value::format_significant;

/// The supported weight-assignment schemes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    /// Polynomial weights that decay with author rank for 0 < x <= 1.
    PolynomialTypeI,
    /// Polynomial weights that decay with author rank for x >= 1.
    PolynomialTypeII,
    /// Every author receives 1/k.
    Equal,
    /// Halving weights, identical to type II at x = 2.
    Geometric,
    /// Comparison scheme: weights proportional to k+1-j.
    Arithmetic,
    /// Comparison scheme: weights proportional to 1/j.
    Harmonic,
}

impl SchemeKind {
    /// Every kind, in the order used by reports.
    pub const ALL: [SchemeKind; 6] = [
        SchemeKind::PolynomialTypeI,
        SchemeKind::PolynomialTypeII,
        SchemeKind::Equal,
        SchemeKind::Geometric,
        SchemeKind::Arithmetic,
        SchemeKind::Harmonic,
    ];

    /// The stable identifier used on the command line and in JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            SchemeKind::PolynomialTypeI => "poly1",
            SchemeKind::PolynomialTypeII => "poly2",
            SchemeKind::Equal => "equal",
            SchemeKind::Geometric => "geometric",
            SchemeKind::Arithmetic => "arithmetic",
            SchemeKind::Harmonic => "harmonic",
        }
    }

    /// True for the two kinds that take a weight-control parameter.
    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            SchemeKind::PolynomialTypeI | SchemeKind::PolynomialTypeII
        )
    }

    /// True for schemes included only as points of comparison with the
    /// polynomial family.
    pub fn is_comparison(self) -> bool {
        matches!(self, SchemeKind::Arithmetic | SchemeKind::Harmonic)
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SchemeKind {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, WeightError> {
        match s {
            "poly1" => Ok(SchemeKind::PolynomialTypeI),
            "poly2" => Ok(SchemeKind::PolynomialTypeII),
            "equal" => Ok(SchemeKind::Equal),
            "geometric" => Ok(SchemeKind::Geometric),
            "arithmetic" => Ok(SchemeKind::Arithmetic),
            "harmonic" => Ok(SchemeKind::Harmonic),
            other => Err(WeightError::UnknownScheme(other.to_string())),
        }
    }
}

/// Selects one of the two polynomial forms for operations that apply to
/// both, such as the closed form and the first/last ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    TypeI,
    TypeII,
}

impl PolyKind {
    pub fn scheme_kind(self) -> SchemeKind {
        match self {
            PolyKind::TypeI => SchemeKind::PolynomialTypeI,
            PolyKind::TypeII => SchemeKind::PolynomialTypeII,
        }
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.scheme_kind().fmt(f)
    }
}

/// A weight-control parameter: exact or floating point.
///
/// The variant decides the arithmetic mode of everything computed from it.
#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Exact(Rational),
    Real(f64),
}

impl Param {
    pub fn is_exact(&self) -> bool {
        matches!(self, Param::Exact(_))
    }

    /// The parameter as a double, rounding exact values to nearest.
    pub fn to_f64(&self) -> Result<f64, NumericError> {
        match self {
            Param::Exact(r) => r.to_f64(),
            Param::Real(v) => Ok(*v),
        }
    }

    /// Canonical text form: `1/3` exact, 12 significant digits float.
    pub fn render(&self) -> String {
        match self {
            Param::Exact(r) => r.to_string(),
            Param::Real(v) => format_significant(*v),
        }
    }

    /// JSON form: exact values as strings, floats as numbers.
    pub fn to_json_value(&self) -> Value {
        match self {
            Param::Exact(r) => Value::String(r.to_string()),
            Param::Real(v) => json!(v),
        }
    }

    pub(crate) fn is_finite(&self) -> bool {
        match self {
            Param::Exact(_) => true,
            Param::Real(v) => v.is_finite(),
        }
    }

    pub(crate) fn gt_zero(&self) -> bool {
        match self {
            Param::Exact(r) => *r > Rational::from_integer(0),
            Param::Real(v) => *v > 0.0,
        }
    }

    pub(crate) fn ge_one(&self) -> bool {
        match self {
            Param::Exact(r) => *r >= Rational::one(),
            Param::Real(v) => *v >= 1.0,
        }
    }

    pub(crate) fn le_one(&self) -> bool {
        match self {
            Param::Exact(r) => *r <= Rational::one(),
            Param::Real(v) => *v <= 1.0,
        }
    }

    pub(crate) fn is_one(&self) -> bool {
        match self {
            Param::Exact(r) => *r == Rational::one(),
            Param::Real(v) => *v == 1.0,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Param {
    type Err = NumericError;

    /// Parses a parameter the way the command line does.
    ///
    /// Fractions (`1/3`), integers, and plain decimals with at most six
    /// fractional digits (`0.5`, `1.000001`) become exact rationals; any
    /// other decimal or scientific form falls back to floating point.
    fn from_str(s: &str) -> Result<Self, NumericError> {
        let t = s.trim();
        if t.is_empty() {
            return Err(NumericError::Parse(s.to_string()));
        }
        if t.contains('/') {
            return Ok(Param::Exact(t.parse()?));
        }
        if let Some(exact) = parse_short_decimal(t) {
            return Ok(exact);
        }
        match t.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Param::Real(v)),
            _ => Err(NumericError::Parse(s.to_string())),
        }
    }
}

/// Reads a plain decimal with at most six fractional digits as an exact
/// rational; returns `None` for anything longer or not of that shape.
fn parse_short_decimal(t: &str) -> Option<Param> {
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) || frac_part.len() > 6 {
        return None;
    }
    let mut numer: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    if negative {
        numer = -numer;
    }
    let denom = 10u64.pow(frac_part.len() as u32);
    Some(Param::Exact(
        Rational::new(numer, denom).expect("denominator is a positive power of ten"),
    ))
}

/// A validated scheme selection: a kind plus its parameter where one is
/// required.
#[derive(Clone, Debug, PartialEq)]
pub struct SchemeSpec {
    kind: SchemeKind,
    x: Option<Param>,
}

impl SchemeSpec {
    /// Pairs a kind with a parameter, enforcing the domain rules.
    ///
    /// Polynomial kinds require `x` (type I: 0 < x <= 1, type II: x >= 1);
    /// the other kinds reject one.
    pub fn new(kind: SchemeKind, x: Option<Param>) -> Result<Self, WeightError> {
        match (&x, kind.is_polynomial()) {
            (None, true) => Err(WeightError::MissingParameter { kind }),
            (Some(_), false) => Err(WeightError::UnexpectedParameter { kind }),
            (Some(p), true) => {
                check_parameter(kind, p)?;
                Ok(Self { kind, x })
            }
            (None, false) => Ok(Self { kind, x }),
        }
    }

    /// A polynomial scheme of the given form.
    pub fn polynomial(kind: PolyKind, x: Param) -> Result<Self, WeightError> {
        Self::new(kind.scheme_kind(), Some(x))
    }

    /// The polynomial scheme whose domain contains `x`: type II for x >= 1,
    /// type I for 0 < x < 1.
    ///
    /// Lets front ends accept any positive parameter without asking the
    /// caller to name a form; at x = 1 the two coincide.
    pub fn polynomial_for(x: Param) -> Result<Self, WeightError> {
        if !x.is_finite() || !x.gt_zero() {
            return Err(WeightError::NonPositiveParameter { x: x.render() });
        }
        let kind = if x.ge_one() {
            PolyKind::TypeII
        } else {
            PolyKind::TypeI
        };
        Self::polynomial(kind, x)
    }

    pub fn equal() -> Self {
        Self {
            kind: SchemeKind::Equal,
            x: None,
        }
    }

    pub fn geometric() -> Self {
        Self {
            kind: SchemeKind::Geometric,
            x: None,
        }
    }

    pub fn arithmetic() -> Self {
        Self {
            kind: SchemeKind::Arithmetic,
            x: None,
        }
    }

    pub fn harmonic() -> Self {
        Self {
            kind: SchemeKind::Harmonic,
            x: None,
        }
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn x(&self) -> Option<&Param> {
        self.x.as_ref()
    }

    /// True when every value computed under this spec is an exact rational.
    pub fn is_exact_mode(&self) -> bool {
        self.x.as_ref().is_none_or(Param::is_exact)
    }

    /// Provenance block attached to JSON output.
    pub fn to_json_value(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "x": self.x.as_ref().map_or(Value::Null, Param::to_json_value),
            "mode": if self.is_exact_mode() { "exact" } else { "float" },
            "comparison": self.kind.is_comparison(),
        })
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.x {
            Some(x) => write!(f, "{}(x = {})", self.kind, x),
            None => self.kind.fmt(f),
        }
    }
}

fn check_parameter(kind: SchemeKind, p: &Param) -> Result<(), WeightError> {
    let (ok, domain) = match kind {
        SchemeKind::PolynomialTypeI => (p.is_finite() && p.gt_zero() && p.le_one(), "0 < x <= 1"),
        SchemeKind::PolynomialTypeII => (p.is_finite() && p.ge_one(), "x >= 1"),
        _ => unreachable!("only polynomial kinds take a parameter"),
    };
    if ok {
        Ok(())
    } else {
        Err(WeightError::ParameterOutOfRange {
            kind,
            x: p.render(),
            domain,
        })
    }
}
