//! Exact rational numbers and their literal syntax (`p/q` or an integer).

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational.
pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero or negative denominator in `{0}`")]
    BadDenominator(String),
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

pub fn half(x: &Q) -> Q {
    x / int(2)
}

/// `2^-k`
pub fn dyadic(k: u32) -> Q {
    Q::new(BigInt::one(), BigInt::one() << k)
}

pub fn min(a: &Q, b: &Q) -> Q {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max(a: &Q, b: &Q) -> Q {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Parses `p/q`, `-p/q` or an integer. The denominator must be positive.
pub fn parse_rational(text: &str) -> Result<Q, RationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(RationalError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num = parse_int(num).ok_or_else(|| RationalError::Malformed(s.to_string()))?;
    let den = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(RationalError::BadDenominator(s.to_string()));
            }
            parse_int(d).ok_or_else(|| RationalError::Malformed(s.to_string()))?
        }
    };
    if !den.is_positive() {
        return Err(RationalError::BadDenominator(s.to_string()));
    }
    Ok(Q::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<BigInt>().ok()
}

/// Formats in the literal syntax accepted by [`parse_rational`].
pub struct Lit<'a>(pub &'a Q);

impl fmt::Display for Lit<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

pub fn lit(q: &Q) -> String {
    Lit(q).to_string()
}

/// Smallest power of two `2^k` with `2^k >= x` for positive `x`; `0` otherwise.
pub fn ceil_log2(x: &Q) -> i64 {
    if !x.is_positive() {
        return 0;
    }
    let mut k: i64 = 0;
    let mut p = Q::one();
    if *x >= p {
        while p < *x {
            p *= int(2);
            k += 1;
        }
    } else {
        while &p / int(2) >= *x {
            p /= int(2);
            k -= 1;
        }
    }
    k
}

/// Least common multiple of the denominators of the given rationals.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// The rational with the least denominator in `[a, b]`, and among those the
/// one of least absolute value. `a ≤ b` is assumed.
pub fn simplest_between(a: &Q, b: &Q) -> Q {
    if !a.is_positive() && !b.is_negative() {
        return Q::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if fl == *a {
        return fl;
    }
    let up = &fl + Q::one();
    if up <= *b {
        return up;
    }
    // fl < a ≤ b < fl + 1
    let inner = simplest_between(&(Q::one() / (b - &fl)), &(Q::one() / (a - &fl)));
    fl + Q::one() / inner
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 1/1000000 ").unwrap(), ratio(1, 1_000_000));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn literal_round_trip() {
        for q in [ratio(-7, 3), int(0), int(12), ratio(5, 8)] {
            assert_eq!(parse_rational(&lit(&q)).unwrap(), q);
        }
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&ratio(-1, 3), &ratio(5, 7)), int(0));
        assert_eq!(simplest_between(&ratio(3, 2), &ratio(7, 2)), int(2));
        assert_eq!(simplest_between(&ratio(-7, 2), &ratio(-3, 2)), int(-2));
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(2, 5)), ratio(1, 3));
        assert_eq!(simplest_between(&ratio(5, 8), &ratio(5, 8)), ratio(5, 8));
        assert_eq!(simplest_between(&ratio(-23, 16), &ratio(27, 16)), int(0));
    }

    #[test]
    fn ceil_log2_brackets() {
        assert_eq!(ceil_log2(&int(1)), 0);
        assert_eq!(ceil_log2(&int(5)), 3);
        assert_eq!(ceil_log2(&ratio(1, 4)), -2);
        assert_eq!(ceil_log2(&ratio(1, 3)), -1);
    }
}
