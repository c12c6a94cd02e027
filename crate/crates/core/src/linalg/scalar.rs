//! Exact rational scalars and dense coordinate vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;
use thiserror::Error;

pub type Scalar = BigRational;
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^e` as a scalar.
pub fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

/// Parses `p` or `p/q`; the result is reduced.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let t = text.trim();
    let bad = || ScalarParseError::Malformed(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(n, d))
}

/// Canonical `p/q` text, always with a denominator.
pub fn fmt_scalar(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn zeros(n: usize) -> Vector {
    vec![zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|a| c * a).collect()
}

pub fn neg(v: &[Scalar]) -> Vector {
    v.iter().map(|a| -a).collect()
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut s = zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            s += a * b;
        }
    }
    s
}

/// Vector text used in witnesses: a bare scalar in dimension one,
/// otherwise a parenthesised list.
pub fn fmt_vector(v: &[Scalar]) -> String {
    if v.len() == 1 {
        fmt_scalar(&v[0])
    } else {
        let parts: Vec<String> = v.iter().map(fmt_scalar).collect();
        format!("({})", parts.join(", "))
    }
}

pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(fmt_scalar(&parse_scalar("-2/4").unwrap()), "-1/2");
        assert_eq!(fmt_scalar(&parse_scalar("3").unwrap()), "3/1");
        assert_eq!(fmt_scalar(&parse_scalar(" 0/7 ").unwrap()), "0/1");
        assert_eq!(fmt_scalar(&parse_scalar("5/-10").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            parse_scalar("1/0"),
            Err(ScalarParseError::ZeroDenominator(_))
        ));
        assert!(parse_scalar("x/2").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1.5").is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(sign(0), one());
        assert_eq!(sign(-3), -one());
        assert_eq!(sign(4), one());
    }
}
