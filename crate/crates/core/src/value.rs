//! The scalar abstraction shared by the exact and floating-point pipelines.

use std::ops::{Div, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::rational::Rational;
use crate::scheme::Param;

/// Field-like scalar the weight computations are written against.
///
/// Two backends implement it: [`Rational`] for exact arithmetic and `f64`
/// for floating point. Generic code runs identically in both modes; only
/// rounding differs.
pub trait Scalar:
    Clone + PartialOrd + Zero + One + Sub<Output = Self> + Div<Output = Self>
{
    /// The count `n` as a scalar.
    fn from_count(n: usize) -> Self;

    /// Integer power. Follows the `0^0 = 1` convention of `f64::powi`; use
    /// [`Rational::pow`] where that case must be rejected instead.
    fn powi(&self, exp: u32) -> Self;

    /// False only for non-finite floats.
    fn is_finite(&self) -> bool;

    /// The value as a scheme parameter of the matching mode.
    fn to_param(&self) -> Param;

    /// Canonical text form: `4/7` exact, 12 significant digits float.
    fn render(&self) -> String;

    /// JSON form: exact values as strings, floats as numbers.
    fn to_json(&self) -> Value;
}

impl Scalar for Rational {
    fn from_count(n: usize) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn powi(&self, exp: u32) -> Self {
        match self.pow(exp) {
            Ok(v) => v,
            Err(_) => Rational::one(),
        }
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn to_param(&self) -> Param {
        Param::Exact(self.clone())
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Scalar for f64 {
    fn from_count(n: usize) -> Self {
        n as f64
    }

    fn powi(&self, exp: u32) -> Self {
        f64::powi(*self, exp as i32)
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn to_param(&self) -> Param {
        Param::Real(*self)
    }

    fn render(&self) -> String {
        format_significant(*self)
    }

    fn to_json(&self) -> Value {
        json!(self)
    }
}

/// Formats a double with 12 significant digits, trailing zeros trimmed.
///
/// Moderate magnitudes render in plain decimal (`0.500488758553`, `1023`);
/// anything below 1e-4 or at 1e12 and above keeps scientific notation.
pub fn format_significant(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let exponential = format!("{:.11e}", v);
    let (mantissa, exponent) = exponential.split_once('e').expect("exponential form");
    let exponent: i32 = exponent.parse().expect("numeric exponent");
    let sign = if mantissa.starts_with('-') { "-" } else { "" };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if (-4..12).contains(&exponent) {
        if exponent >= 0 {
            let (int_part, frac_part) = digits.split_at(exponent as usize + 1);
            let frac_part = frac_part.trim_end_matches('0');
            if frac_part.is_empty() {
                int_part.to_string()
            } else {
                format!("{int_part}.{frac_part}")
            }
        } else {
            let leading = "0".repeat((-exponent - 1) as usize);
            format!("0.{leading}{}", digits.trim_end_matches('0'))
        }
    } else {
        let (head, tail) = digits.split_at(1);
        let tail = tail.trim_end_matches('0');
        if tail.is_empty() {
            format!("{head}e{exponent}")
        } else {
            format!("{head}.{tail}e{exponent}")
        }
    };
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_count_in_both_modes() {
        assert_eq!(Rational::from_count(3), Rational::from_integer(3));
        assert_eq!(f64::from_count(3), 3.0);
    }

    #[test]
    fn powi_follows_the_float_convention_at_zero() {
        assert_eq!(Scalar::powi(&Rational::zero(), 0), Rational::one());
        assert_eq!(Scalar::powi(&0.0f64, 0), 1.0);
        assert_eq!(
            Scalar::powi(&Rational::new(2, 3).unwrap(), 3),
            Rational::new(8, 27).unwrap()
        );
    }

    #[test]
    fn render_is_canonical_per_mode() {
        assert_eq!(Rational::new(4, 7).unwrap().render(), "4/7");
        assert_eq!(0.5f64.render(), "0.5");
    }

    #[test]
    fn json_uses_strings_for_exact_and_numbers_for_float() {
        assert_eq!(
            Rational::new(1, 3).unwrap().to_json(),
            Value::String("1/3".into())
        );
        assert_eq!(0.25f64.to_json(), json!(0.25));
    }

    #[test]
    fn formats_short_decimals_plainly() {
        assert_eq!(format_significant(0.5), "0.5");
        assert_eq!(format_significant(-0.25), "-0.25");
        assert_eq!(format_significant(0.0), "0");
        assert_eq!(format_significant(1023.0), "1023");
        assert_eq!(format_significant(1.0), "1");
    }

    #[test]
    fn formats_twelve_significant_digits() {
        assert_eq!(format_significant(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_significant(2.0 / 3.0), "0.666666666667");
        assert_eq!(format_significant(512.0 / 1023.0), "0.500488758553");
    }

    #[test]
    fn keeps_scientific_notation_for_extremes() {
        assert_eq!(format_significant(1e-5), "1e-5");
        assert_eq!(format_significant(1.5e-5), "1.5e-5");
        assert_eq!(format_significant(1e12), "1e12");
        assert_eq!(format_significant(123456789012345.0), "1.23456789012e14");
    }

    #[test]
    fn boundary_magnitudes_stay_plain() {
        assert_eq!(format_significant(1e-4), "0.0001");
        assert_eq!(format_significant(999999999999.0), "999999999999");
    }

    #[test]
    fn non_finite_values_render_as_themselves() {
        assert_eq!(format_significant(f64::INFINITY), "inf");
        assert_eq!(format_significant(f64::NAN), "NaN");
    }
}
