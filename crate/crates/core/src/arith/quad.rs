//! Elements `x + y√d` of a real quadratic field with exact rational parts.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{is_integer, parse_rational, to_f64, BigRat};
use super::ArithError;

/// `rational + radical·√d` with `d` square-free.
///
/// Elements with a zero radical part are stored with `d = 1`, so a plain
/// rational is compatible with every field and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadRat {
    rational: BigRat,
    radical: BigRat,
    d: u32,
}

impl QuadRat {
    /// Builds `x + y√d`, extracting square factors of `d`.
    pub fn new(x: BigRat, y: BigRat, d: u32) -> Result<Self, ArithError> {
        if d == 0 {
            return Err(ArithError::InvalidDiscriminant(d));
        }
        let (s, core) = split_square(d);
        let y = y * BigRat::from_integer(BigInt::from(s));
        if core == 1 {
            return Ok(Self::from_rat(x + y));
        }
        Ok(Self::canonical(x, y, core))
    }

    fn canonical(rational: BigRat, radical: BigRat, d: u32) -> Self {
        if radical.is_zero() {
            Self { rational, radical, d: 1 }
        } else {
            Self { rational, radical, d }
        }
    }

    pub fn zero() -> Self {
        Self::from_rat(BigRat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(BigRat::one())
    }

    pub fn from_rat(x: BigRat) -> Self {
        Self { rational: x, radical: BigRat::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(BigRat::from_integer(BigInt::from(n)))
    }

    /// `y·√d` for an integer `y`.
    pub fn surd(y: i64, d: u32) -> Result<Self, ArithError> {
        Self::new(BigRat::zero(), BigRat::from_integer(BigInt::from(y)), d)
    }

    pub fn rational_part(&self) -> &BigRat {
        &self.rational
    }

    pub fn radical_part(&self) -> &BigRat {
        &self.radical
    }

    /// Discriminant; `1` whenever the radical part vanishes.
    pub fn discriminant(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    fn d_rat(&self) -> BigRat {
        BigRat::from_integer(BigInt::from(self.d))
    }

    /// Field norm `x² − d·y²`.
    pub fn norm(&self) -> BigRat {
        &self.rational * &self.rational - self.d_rat() * &self.radical * &self.radical
    }

    pub fn conj(&self) -> Self {
        Self::canonical(self.rational.clone(), -&self.radical, self.d)
    }

    fn common_d(&self, other: &Self) -> Result<u32, ArithError> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(ArithError::DiscriminantMismatch(a, b)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_d(other)?;
        Ok(Self::canonical(
            &self.rational + &other.rational,
            &self.radical + &other.radical,
            d,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_d(other)?;
        let dr = BigRat::from_integer(BigInt::from(d));
        let x = &self.rational * &other.rational + dr * &self.radical * &other.radical;
        let y = &self.rational * &other.radical + &self.radical * &other.rational;
        Ok(Self::canonical(x, y, d))
    }

    /// Inverse through the conjugate: `1/a = conj(a)/N(a)`.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::canonical(&self.rational / &n, -&self.radical / &n, self.d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, k: &BigRat) -> Self {
        Self::canonical(&self.rational * k, &self.radical * k, self.d)
    }

    /// Integrality of the rational and radical parts separately.
    pub fn is_integral(&self) -> (bool, bool) {
        (is_integer(&self.rational), is_integer(&self.radical))
    }

    /// Sign of the real number `x + y√d`, decided exactly.
    pub fn signum(&self) -> Ordering {
        let sx = self.rational.cmp(&BigRat::zero());
        let sy = self.radical.cmp(&BigRat::zero());
        if sy == Ordering::Equal {
            return sx;
        }
        if sx == Ordering::Equal || sx == sy {
            return sy;
        }
        let x2 = &self.rational * &self.rational;
        let dy2 = self.d_rat() * &self.radical * &self.radical;
        if x2 > dy2 {
            sx
        } else {
            sy
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + to_f64(&self.radical) * libm::sqrt(self.d as f64)
    }

    /// Parses the rendering produced by `Display` (also accepting `sqrt` for
    /// `√`), e.g. `"1/2 + (3/4)√3"`, `"-3√3"`, `"2"`.
    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let cleaned: String = s.replace("sqrt", "√").chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(ArithError::Parse(s.to_string()));
        }
        let mut acc = Self::zero();
        for term in split_terms(&cleaned) {
            acc = acc.try_add(&parse_term(term).map_err(|_| ArithError::Parse(s.to_string()))?)?;
        }
        Ok(acc)
    }
}

fn split_square(d: u32) -> (u32, u32) {
    let mut s = 1u32;
    let mut core = d;
    let mut f = 2u32;
    while f.saturating_mul(f) <= core {
        while core.is_multiple_of(f * f) {
            core /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, core)
}

fn split_terms(s: &str) -> impl Iterator<Item = &str> {
    let bytes = s.as_bytes();
    let mut cuts = alloc::vec::Vec::new();
    let mut depth = 0i32;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if i > 0 && depth == 0 && bytes[i - 1] != b'/' => cuts.push(i),
            _ => {}
        }
    }
    let mut bounds = alloc::vec![0];
    bounds.extend(cuts);
    bounds.push(s.len());
    (0..bounds.len() - 1).map(move |k| &s[bounds[k]..bounds[k + 1]])
}

fn parse_term(term: &str) -> Result<QuadRat, ArithError> {
    let bad = || ArithError::Parse(term.to_string());
    let (negative, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    let value = match body.split_once('√') {
        None => QuadRat::from_rat(parse_rational(body)?),
        Some((coef, rad)) => {
            let coef = coef.trim_end_matches('*');
            let coef = coef.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coef);
            let y = if coef.is_empty() { BigRat::one() } else { parse_rational(coef)? };
            let rad = rad.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rad);
            let d: u32 = rad.parse().map_err(|_| bad())?;
            QuadRat::new(BigRat::zero(), y, d)?
        }
    };
    Ok(if negative { -value } else { value })
}

fn write_radical(f: &mut fmt::Formatter<'_>, y: &BigRat, d: u32) -> fmt::Result {
    if y.is_one() {
        write!(f, "√{d}")
    } else if is_integer(y) {
        write!(f, "{y}√{d}")
    } else {
        write!(f, "({y})√{d}")
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical.is_zero() {
            return write!(f, "{}", self.rational);
        }
        let mag = self.radical.abs();
        let negative = self.radical.is_negative();
        if self.rational.is_zero() {
            if negative {
                f.write_str("-")?;
            }
        } else {
            write!(f, "{} {} ", self.rational, if negative { "-" } else { "+" })?;
        }
        write_radical(f, &mag, self.d)
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::canonical(-self.rational, -self.radical, self.d)
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::canonical(-&self.rational, -&self.radical, self.d)
    }
}

// The operators panic on a discriminant mismatch; use the `try_*` methods
// when mixing fields is possible.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                self.$checked(rhs).expect("quadratic field mismatch")
            }
        }
        impl $trait<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use alloc::format;
    use proptest::prelude::*;

    fn q(x: BigRat, y: BigRat) -> QuadRat {
        QuadRat::new(x, y, 3).unwrap()
    }

    #[test]
    fn sqrt3_squared_is_three() {
        let s = QuadRat::surd(1, 3).unwrap();
        assert_eq!(&s * &s, QuadRat::from_int(3));
    }

    #[test]
    fn one_is_identity() {
        let one = q(int(1), int(0));
        let x = q(rat(-2, 7), rat(5, 3));
        assert_eq!(&one * &x, x);
    }

    #[test]
    fn norm_one_pair() {
        let a = q(int(2), int(-1));
        let b = q(int(2), int(1));
        assert_eq!(&a * &b, QuadRat::one());
        assert_eq!(b.inv().unwrap(), a);
    }

    #[test]
    fn inverses() {
        assert_eq!(QuadRat::from_int(2).inv().unwrap(), QuadRat::from_rat(rat(1, 2)));
        assert_eq!(
            QuadRat::surd(1, 3).unwrap().inv().unwrap(),
            q(int(0), rat(1, 3))
        );
        assert_eq!(QuadRat::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn integrality_flags() {
        assert_eq!(QuadRat::from_int(5).is_integral(), (true, true));
        assert_eq!(q(rat(1, 2), int(1)).is_integral(), (false, true));
        assert_eq!(QuadRat::surd(-4, 3).unwrap().is_integral(), (true, true));
    }

    #[test]
    fn discriminant_mismatch() {
        let a = QuadRat::surd(1, 2).unwrap();
        let b = QuadRat::surd(1, 3).unwrap();
        assert_eq!(a.try_mul(&b), Err(ArithError::DiscriminantMismatch(2, 3)));
        // plain rationals mix with any field
        assert!(QuadRat::from_int(4).try_mul(&b).is_ok());
    }

    #[test]
    fn square_factors_and_unit_discriminant_fold() {
        // √12 = 2√3
        assert_eq!(QuadRat::surd(1, 12).unwrap(), QuadRat::surd(2, 3).unwrap());
        // y√1 folds into the rational part
        assert_eq!(QuadRat::new(int(1), int(2), 1).unwrap(), QuadRat::from_int(3));
        assert_eq!(QuadRat::surd(1, 4).unwrap(), QuadRat::from_int(2));
        assert!(QuadRat::new(int(1), int(1), 0).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(q(int(2), int(-1)).signum(), Ordering::Greater);
        assert_eq!(q(int(1), int(-1)).signum(), Ordering::Less);
        assert_eq!(q(int(-7), int(4)).signum(), Ordering::Less);
        assert_eq!(q(int(-6), int(4)).signum(), Ordering::Greater);
        assert_eq!(QuadRat::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn rendering() {
        assert_eq!(format!("{}", q(rat(1, 2), rat(3, 4))), "1/2 + (3/4)√3");
        assert_eq!(format!("{}", QuadRat::surd(-3, 3).unwrap()), "-3√3");
        assert_eq!(format!("{}", q(int(2), int(-1))), "2 - √3");
        assert_eq!(format!("{}", q(int(0), rat(-1, 3))), "-(1/3)√3");
        assert_eq!(format!("{}", QuadRat::from_int(-5)), "-5");
    }

    #[test]
    fn parsing_accepts_aliases() {
        assert_eq!(QuadRat::parse("-3sqrt3").unwrap(), QuadRat::surd(-3, 3).unwrap());
        assert_eq!(QuadRat::parse("1/2 + sqrt(3)").unwrap(), q(rat(1, 2), int(1)));
        assert_eq!(QuadRat::parse("4*√3").unwrap(), QuadRat::surd(4, 3).unwrap());
        assert!(QuadRat::parse("√2 + √3").is_err());
        assert!(QuadRat::parse("").is_err());
        assert!(QuadRat::parse("x√3").is_err());
    }

    fn small_rat() -> impl Strategy<Value = BigRat> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    fn elem() -> impl Strategy<Value = QuadRat> {
        (small_rat(), small_rat()).prop_map(|(x, y)| q(x, y))
    }

    proptest! {
        #[test]
        fn field_axioms(a in elem(), b in elem(), c in elem()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), QuadRat::one());
            }
        }

        #[test]
        fn norm_is_multiplicative(a in elem(), b in elem()) {
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn signum_matches_float(a in elem()) {
            let f = a.to_f64();
            let expected = if a.is_zero() { Ordering::Equal } else if f > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(a.signum(), expected);
        }

        #[test]
        fn display_parses_back(a in elem()) {
            prop_assert_eq!(QuadRat::parse(&format!("{a}")).unwrap(), a);
        }
    }
}
