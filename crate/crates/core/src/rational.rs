//! Rational helpers shared by every numeric module.

use alloc::string::String;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `p/q` in lowest terms, or a bare integer when the denominator is one.
pub fn format(r: &Rational) -> String {
    let mut s = String::new();
    if r.denom().is_one() {
        let _ = write!(s, "{}", r.numer());
    } else {
        let _ = write!(s, "{}/{}", r.numer(), r.denom());
    }
    s
}

/// Parses `p`, `-p` or `p/q` with decimal integers.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for (p, q) in [(1, 2), (-3, 4), (6, 3), (0, 5)] {
            let r = ratio(p, q);
            assert_eq!(parse(&format(&r)), Some(r));
        }
        assert_eq!(format(&ratio(6, 4)), "3/2");
        assert_eq!(format(&int(-2)), "-2");
        assert_eq!(parse("1/0"), None);
    }
}
