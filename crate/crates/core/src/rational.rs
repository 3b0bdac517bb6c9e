//! Exact rational helpers on top of `num-rational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `a` or `a/b`, lowest terms, sign on the numerator.
pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Parses `a`, `-a`, `a/b`. `offset` is added to reported error positions.
pub fn parse(text: &str, offset: usize) -> Result<Rational> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    if t.is_empty() {
        return Err(Error::parse(offset + lead, "expected a rational number"));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (t, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(offset + lead, format!("invalid integer {num:?}")))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(offset + lead, format!("invalid denominator {d:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::parse(offset + lead, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}
