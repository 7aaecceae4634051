//! Exact rational scalars.
//!
//! Every geometric predicate in the workbench runs over arbitrary-precision
//! rationals; floating point only appears when bound formulas are evaluated
//! numerically. `ExactScalar` is kept in lowest terms with a positive
//! denominator by the backing library, so equality is structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type ExactScalar = BigRational;

/// Sign of an exact scalar: -1, 0, or +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(x: &ExactScalar) -> Sign {
        match x.cmp(&ExactScalar::zero()) {
            Ordering::Less => Sign::Neg,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Pos,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// Render as one of `-`, `0`, `+`.
    pub fn glyph(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

pub fn int(n: i64) -> ExactScalar {
    ExactScalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> ExactScalar {
    ExactScalar::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form `p/q`, always with an explicit denominator.
pub fn format_scalar(x: &ExactScalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse `p/q`, a plain integer, or a decimal literal such as `0.05`.
///
/// Decimals convert exactly (`0.05` becomes `1/20`); there is no float round
/// trip anywhere in the path.
pub fn parse_scalar(s: &str) -> Result<ExactScalar> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::input("empty rational literal"));
    }
    if let Ok(r) = BigRational::from_str(s) {
        return Ok(r);
    }
    // Decimal form: [-]int[.frac]
    if let Some(dot) = s.find('.') {
        let (whole, frac) = (&s[..dot], &s[dot + 1..]);
        if !frac.is_empty() && frac.chars().all(|c| c.is_ascii_digit()) {
            let negative = whole.starts_with('-');
            let whole_digits = whole.trim_start_matches(['-', '+']);
            if whole_digits.chars().all(|c| c.is_ascii_digit()) {
                let whole_int = if whole_digits.is_empty() {
                    BigInt::zero()
                } else {
                    BigInt::from_str(whole_digits)
                        .map_err(|e| Error::input(format!("bad decimal '{s}': {e}")))?
                };
                let frac_int = BigInt::from_str(frac)
                    .map_err(|e| Error::input(format!("bad decimal '{s}': {e}")))?;
                let scale = BigInt::from(10u32).pow(frac.len() as u32);
                let mut value = BigRational::new(whole_int * &scale + frac_int, scale);
                if negative {
                    value = -value;
                }
                return Ok(value);
            }
        }
    }
    Err(Error::input(format!("cannot parse rational '{s}'")))
}

/// Convert to f64 for reporting. Exactness is already spent by the caller.
pub fn to_f64(x: &ExactScalar) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// x^e for a nonnegative integer exponent.
pub fn pow(x: &ExactScalar, e: u32) -> ExactScalar {
    let mut acc = ExactScalar::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn abs(x: &ExactScalar) -> ExactScalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "0/1", "12/5"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(format_scalar(&x), s);
        }
    }

    #[test]
    fn parse_integer_and_decimal_forms() {
        assert_eq!(parse_scalar("5").unwrap(), int(5));
        assert_eq!(parse_scalar("-3").unwrap(), int(-3));
        assert_eq!(parse_scalar("0.05").unwrap(), ratio(1, 20));
        assert_eq!(parse_scalar("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_scalar("2.0").unwrap(), int(2));
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let x = ratio(4, -6);
        assert_eq!(format_scalar(&x), "-2/3");
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let x = ratio(3, 7);
        let mut acc = int(1);
        for e in 0..8u32 {
            assert_eq!(pow(&x, e), acc);
            acc *= &x;
        }
    }

    #[test]
    fn sign_classification() {
        assert_eq!(Sign::of(&int(-2)), Sign::Neg);
        assert_eq!(Sign::of(&int(0)), Sign::Zero);
        assert_eq!(Sign::of(&ratio(1, 9)), Sign::Pos);
    }
}
