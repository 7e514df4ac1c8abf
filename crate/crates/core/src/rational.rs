//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals. The
//! serialized form is always the reduced `"p/q"` string (or `"p"` when the
//! denominator is one), which keeps JSON output byte-stable across runs.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// Builds `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer `p` as a rational.
pub fn int(p: i64) -> Rational {
    Rational::from(BigInt::from(p))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from(acc)
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `p` / `p/q` form produced by [`format_rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    let mut parts = s.splitn(2, '/');
    let p: BigInt = parts.next()?.trim().parse().ok()?;
    match parts.next() {
        None => Some(Rational::from(p)),
        Some(q) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

/// Signed rational to latex-free plain text with an explicit sign, used by
/// the plain-text verifier reports.
pub fn format_signed(r: &Rational) -> String {
    if r.is_negative() {
        format!("-{}", format_rational(&-r.clone()))
    } else {
        format_rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["3", "-4", "1/2", "-7/3", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn reduces() {
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(4), int(24));
        assert_eq!(factorial(6), int(720));
    }
}
