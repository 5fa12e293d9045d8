//! Helpers around [`BigRat`], the arbitrary-precision rational used by every
//! symbolic module.

use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

/// Reduced rational with positive denominator; `0` is stored as `0/1`.
pub type BigRat = BigRational;

/// Builds the reduced rational `num/den`.
///
/// # Panics
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &BigRat) -> bool {
    x.denom().is_one()
}

pub fn to_f64(x: &BigRat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact `k`-th root of a rational, if it is itself rational.
///
/// Negative radicands are accepted for odd `k`.
pub fn nth_root_exact(x: &BigRat, k: u32) -> Option<BigRat> {
    if k == 0 {
        return None;
    }
    if x.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return nth_root_exact(&-x, k).map(|r| -r);
    }
    let num_root = x.numer().nth_root(k);
    let den_root = x.denom().nth_root(k);
    if num_root.pow(k) == *x.numer() && den_root.pow(k) == *x.denom() {
        Some(BigRat::new(num_root, den_root))
    } else {
        None
    }
}

/// Parses `"n"`, `"n/d"` or a plain decimal such as `"-0.375"` into an exact
/// rational.
pub fn parse_rational(s: &str) -> Result<BigRat, ArithError> {
    let s = s.trim();
    let bad = || ArithError::Parse(String::from(s));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        return Ok(BigRat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let mut digits = String::from(whole_digits);
        digits.push_str(frac);
        let mag: BigInt = if digits.is_empty() {
            return Err(bad());
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let value = BigRat::new(mag, scale);
        return Ok(if negative { -value } else { value });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRat::from_integer(n))
}

/// `gcd` of two big integers, always non-negative.
pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}
