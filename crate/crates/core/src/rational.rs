//! Arbitrary-precision rational arithmetic.
//!
//! [`Rational`] wraps a fraction that is always stored in lowest terms with
//! a positive denominator, so equality is structural and rendering is
//! canonical: `4/7`, `-1/3`, and integers without a denominator. Conversion
//! to `f64` rounds to the nearest representable double and reports overflow
//! as an error instead of returning infinity.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::NumericError;

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom` reduced to lowest terms.
    ///
    /// A negative sign on the denominator migrates to the numerator. A zero
    /// denominator is an error.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, NumericError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(NumericError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(numer.into(), denom)))
    }

    /// The integer `n` as a rational.
    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// The reduced numerator; carries the sign.
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// The reduced denominator; always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Raises to an integer power. `0^0` is rejected as indeterminate.
    pub fn pow(&self, exp: u32) -> Result<Self, NumericError> {
        if exp == 0 && self.0.is_zero() {
            return Err(NumericError::IndeterminatePower);
        }
        // A reduced fraction stays reduced under powering, so the gcd pass
        // can be skipped.
        Ok(Self(BigRational::new_raw(
            Pow::pow(self.0.numer(), exp),
            Pow::pow(self.0.denom(), exp),
        )))
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        if rhs.0.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// The multiplicative inverse; zero has none.
    pub fn recip(&self) -> Result<Self, NumericError> {
        if self.0.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    /// The nearest representable double.
    ///
    /// Rounding is to nearest, ties to even. Values beyond the double range
    /// are an overflow error rather than an infinity.
    pub fn to_f64(&self) -> Result<f64, NumericError> {
        match self.0.to_f64() {
            Some(v) if v.is_finite() => Ok(v),
            _ => Err(NumericError::FloatOverflow),
        }
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Self;

    /// Panics on a zero divisor; use [`Rational::checked_div`] where the
    /// divisor is not known to be nonzero.
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.0.is_zero(), "division by zero");
        Self(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Self(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Self(BigRational::one())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = NumericError;

    /// Parses `a/b` or a bare integer, with optional signs.
    fn from_str(s: &str) -> Result<Self, NumericError> {
        let parse_int =
            |part: &str| BigInt::from_str(part.trim()).map_err(|_| NumericError::Parse(s.into()));
        match s.trim().split_once('/') {
            Some((numer, denom)) => Self::new(parse_int(numer)?, parse_int(denom)?),
            None => Ok(Self::from_integer(parse_int(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).expect("nonzero denominator")
    }

    #[test]
    fn reduces_on_construction() {
        let half = rat(2, 4);
        assert_eq!(half, rat(1, 2));
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
    }

    #[test]
    fn sign_lives_on_the_numerator() {
        assert_eq!(rat(3, -6).to_string(), "-1/2");
        assert_eq!(rat(-3, -6).to_string(), "1/2");
        assert!(rat(1, -2).denom() > &BigInt::from(0));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(Rational::new(1, 0), Err(NumericError::ZeroDenominator));
    }

    #[test]
    fn zero_is_stored_as_zero_over_one() {
        let zero = rat(0, 5);
        assert!(zero.is_zero());
        assert_eq!(zero.numer(), &BigInt::from(0));
        assert_eq!(zero.denom(), &BigInt::from(1));
    }

    #[test]
    fn integers_render_without_denominator() {
        assert_eq!(Rational::from_integer(7).to_string(), "7");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(rat(0, 3).to_string(), "0");
    }

    #[test]
    fn fractions_render_as_numer_slash_denom() {
        assert_eq!(rat(4, 7).to_string(), "4/7");
        assert_eq!(rat(-1, 3).to_string(), "-1/3");
    }

    #[test]
    fn two_thirds_from_thirds() {
        assert_eq!(rat(1, 3) + rat(1, 3), rat(2, 3));
    }

    #[test]
    fn sevenths_sum_to_one() {
        let total = rat(4, 7) + rat(2, 7) + rat(1, 7);
        assert!(total.is_one());
    }

    #[test]
    fn arithmetic_keeps_lowest_terms() {
        let sum = rat(1, 6) + rat(1, 3);
        assert_eq!(sum.to_string(), "1/2");
        let product = rat(2, 3) * rat(3, 4);
        assert_eq!(product.to_string(), "1/2");
    }

    #[test]
    fn two_to_the_ninth() {
        assert_eq!(
            Rational::from_integer(2).pow(9).unwrap(),
            Rational::from_integer(512)
        );
    }

    #[test]
    fn pow_zero_of_nonzero_is_one() {
        assert!(rat(3, 5).pow(0).unwrap().is_one());
    }

    #[test]
    fn zero_pow_zero_is_indeterminate() {
        assert_eq!(
            Rational::zero().pow(0),
            Err(NumericError::IndeterminatePower)
        );
        assert!(Rational::zero().pow(5).unwrap().is_zero());
    }

    #[test]
    fn pow_of_fraction_stays_reduced() {
        let p = rat(2, 3).pow(4).unwrap();
        assert_eq!(p, rat(16, 81));
    }

    #[test]
    fn checked_div_rejects_zero_divisor() {
        assert_eq!(
            rat(1, 2).checked_div(&Rational::zero()),
            Err(NumericError::DivisionByZero)
        );
        assert_eq!(rat(1, 2).checked_div(&rat(1, 4)).unwrap(), rat(2, 1));
    }

    #[test]
    fn recip_of_zero_is_an_error() {
        assert_eq!(Rational::zero().recip(), Err(NumericError::DivisionByZero));
        assert_eq!(rat(2, 7).recip().unwrap(), rat(7, 2));
    }

    #[test]
    fn ordering_follows_value() {
        assert!(rat(1, 3) < rat(1, 2));
        assert!(Rational::from_integer(2) > rat(3, 2));
        assert!(rat(-1, 2) < Rational::zero());
    }

    #[test]
    fn to_f64_matches_native_division_for_small_values() {
        let thirds = rat(1, 3).to_f64().unwrap();
        assert_eq!(thirds.to_bits(), (1.0f64 / 3.0).to_bits());
        let v = rat(512, 1023).to_f64().unwrap();
        assert_eq!(v.to_bits(), (512.0f64 / 1023.0).to_bits());
    }

    #[test]
    fn to_f64_twelve_digit_long_division_oracle() {
        // Long division computed with plain integers, independent of both
        // the bigint stack and the float path: 512/1023 to 13 significant
        // digits, then rounded to 12.
        let thirteen_digits = 512u128 * 10u128.pow(13) / 1023;
        let rounded = (thirteen_digits + 5) / 10;
        assert_eq!(rounded, 500_488_758_553);

        let v = rat(512, 1023).to_f64().unwrap();
        assert_eq!(
            crate::value::format_significant(v),
            format!("0.{rounded}")
        );
    }

    #[test]
    fn to_f64_overflow_is_an_error() {
        let huge = Rational::from_integer(10).pow(400).unwrap();
        assert_eq!(huge.to_f64(), Err(NumericError::FloatOverflow));
        assert_eq!((-huge).to_f64(), Err(NumericError::FloatOverflow));
    }

    #[test]
    fn to_f64_underflows_to_zero() {
        let tiny = Rational::from_integer(10).pow(400).unwrap().recip().unwrap();
        assert_eq!(tiny.to_f64().unwrap(), 0.0);
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!("4/7".parse::<Rational>().unwrap(), rat(4, 7));
        assert_eq!("-1/3".parse::<Rational>().unwrap(), rat(-1, 3));
        assert_eq!(" 2 ".parse::<Rational>().unwrap(), Rational::from_integer(2));
        assert_eq!("6/4".parse::<Rational>().unwrap(), rat(3, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            "a/b".parse::<Rational>(),
            Err(NumericError::Parse(_))
        ));
        assert!(matches!(
            "1/2/3".parse::<Rational>(),
            Err(NumericError::Parse(_))
        ));
        assert!(matches!("".parse::<Rational>(), Err(NumericError::Parse(_))));
        assert_eq!(
            "1/0".parse::<Rational>(),
            Err(NumericError::ZeroDenominator)
        );
    }

    #[test]
    fn display_round_trips_through_parse() {
        for r in [rat(512, 1023), rat(-7, 3), Rational::from_integer(42)] {
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
