//! Exact rational scalars used for event values and state values.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

pub fn in_unit_interval(v: &Rational) -> bool {
    *v >= Rational::zero() && *v <= Rational::one()
}

/// Parses `n`, `-n` or `n/d`. The result is reduced.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Reduced `n/d`, or `n` when the denominator is one.
pub fn format_rational(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/4"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&ratio(6, 20)), "3/10");
        assert_eq!(format_rational(&int(1)), "1");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn unit_interval() {
        assert!(in_unit_interval(&int(0)));
        assert!(in_unit_interval(&int(1)));
        assert!(!in_unit_interval(&ratio(5, 4)));
        assert!(!in_unit_interval(&ratio(-1, 4)));
    }
}
