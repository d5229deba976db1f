//! Helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q` or `p`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// Converts an integral rational to `i64`.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.denom().is_one() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = rat(6, -8);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
        assert_eq!(to_string(&q), "-3/4");
        assert_eq!(to_string(&int(5)), "5");
    }

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse("4/12").unwrap(), rat(1, 3));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert_eq!(parse("1/0"), Err(Error::DivisionByZero));
        assert!(parse("a/2").is_err());
    }

    #[test]
    fn fractional_part() {
        assert_eq!(frac(&rat(7, 4)), rat(3, 4));
        assert_eq!(frac(&rat(-1, 4)), rat(3, 4));
    }
}
