use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::rational::gcd;
use crate::arith::{BigRat, IntPoly};

use super::CatalogError;

/// `num(z)/den(z)` with integer coefficients, kept in lowest terms: the two
/// polynomials are coprime, their coefficients have no common integer
/// factor and `den` has a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMap {
    num: IntPoly,
    den: IntPoly,
}

impl RationalMap {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, CatalogError> {
        if den.is_zero() {
            return Err(CatalogError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self { num, den: IntPoly::one() });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        } else {
            (num, den)
        };
        let mut c = num.coeffs().iter().chain(den.coeffs()).fold(BigInt::zero(), |a, b| gcd(&a, b));
        if den.leading().is_negative() {
            c = -c;
        }
        num = IntPoly::new(num.coeffs().iter().map(|x| x / &c).collect());
        den = IntPoly::new(den.coeffs().iter().map(|x| x / &c).collect());
        Ok(Self { num, den })
    }

    /// From coefficient lists, lowest degree first.
    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<Self, CatalogError> {
        Self::new(IntPoly::from_i64(num), IntPoly::from_i64(den))
    }

    pub fn polynomial(p: IntPoly) -> Self {
        Self::new(p, IntPoly::one()).expect("nonzero denominator")
    }

    pub fn identity() -> Self {
        Self::polynomial(IntPoly::z())
    }

    pub fn constant(c: i64) -> Self {
        Self::polynomial(IntPoly::from_i64(&[c]))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// Degree as a self-map of the Riemann sphere.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn eval_rat(&self, z: &BigRat) -> Result<BigRat, CatalogError> {
        let d = self.den.eval_rat(z);
        if d.is_zero() {
            return Err(CatalogError::Pole(z.clone()));
        }
        Ok(self.num.eval_rat(z) / d)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.num.eval_f64(z) / self.den.eval_f64(z)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RationalMap) -> RationalMap {
        let k = self.degree();
        let num = self.num.homogenize(k, &inner.num, &inner.den);
        let den = self.den.homogenize(k, &inner.num, &inner.den);
        Self::new(num, den).expect("composition of nondegenerate maps")
    }

    pub fn sub(&self, other: &RationalMap) -> RationalMap {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    /// `1 − self`.
    pub fn one_minus(&self) -> RationalMap {
        Self::constant(1).sub(self)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Numerator of `self − w` for `w = num_w/den_w`, i.e. the polynomial
    /// whose roots are the finite preimages of `w`.
    pub fn fiber_polynomial(&self, w: &BigRat) -> IntPoly {
        let a = self.num.scale(w.denom());
        let b = self.den.scale(w.numer());
        &a - &b
    }

    /// Degrees of numerator and denominator.
    pub(crate) fn degrees(&self) -> (usize, usize) {
        (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0))
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &IntPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        let parts: Vec<alloc::string::String> = [&self.num, &self.den]
            .iter()
            .map(|p| if wrap(p) { alloc::format!("({p})") } else { alloc::format!("{p}") })
            .collect();
        write!(f, "{}/{}", parts[0], parts[1])
    }
}
