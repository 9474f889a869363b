use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Small-integer shorthand.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `max(|numerator|, denominator)`.
pub fn height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    pub input: alloc::string::String,
    pub reason: &'static str,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl core::error::Error for ParseRationalError {}

/// Parses the strict textual form `-?[0-9]+(/[1-9][0-9]*)?`.
///
/// No whitespace, no leading `+`, and a denominator may not start with `0`
/// (which rules out division by zero).
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        input: s.into(),
        reason,
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("numerator must be an optionally signed decimal integer"));
    }
    let numer = BigInt::from_str(num).map_err(|_| err("numerator out of range"))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("denominator must be an unsigned decimal integer"));
            }
            if d.starts_with('0') {
                return Err(err("denominator must be nonzero without leading zeros"));
            }
            BigInt::from_str(d).map_err(|_| err("denominator out of range"))?
        }
    };
    debug_assert!(!denom.is_zero());
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_strict_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("-0").unwrap(), rat(0));
        for bad in ["2/0", "1/-2", "+1", "", "1/", "/2", "1.5", " 1", "1/02", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn canonical_display() {
        assert_eq!(frac(6, -4).to_string(), "-3/2");
        assert_eq!(frac(0, 5).to_string(), "0");
        assert_eq!(frac(0, 5).denom(), &BigInt::one());
    }

    #[test]
    fn height_is_max_of_parts() {
        assert_eq!(height(&frac(-7, 3)), BigInt::from(7));
        assert_eq!(height(&frac(2, 9)), BigInt::from(9));
    }
}
