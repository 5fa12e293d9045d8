//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{gcd, BigRat};

/// `Σ coeffs[i]·zⁱ`; trailing zero coefficients are never stored, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// From small coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::from_i64(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| gcd(&g, c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_rat(&self, z: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * z + BigRat::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `Σ cᵢ·numⁱ·den^(k−i)`: the numerator of `self(num/den)` after
    /// multiplying through by `den^k`.
    pub fn homogenize(&self, k: usize, num: &IntPoly, den: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = num.pow(i as u32) * den.pow((k - i) as u32);
            acc = acc + term.scale(c);
        }
        acc
    }

    /// Pseudo-remainder `lc(other)^(deg self − deg other + 1) · self mod other`.
    pub fn pseudo_rem(&self, other: &IntPoly) -> IntPoly {
        let dv = other.degree().expect("pseudo-division by zero polynomial");
        let lc = other.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dv {
                break;
            }
            let lr = r.leading();
            let shifted = IntPoly::new(
                core::iter::repeat_n(BigInt::zero(), dr - dv)
                    .chain(other.coeffs.iter().map(|c| c * &lr))
                    .collect(),
            );
            r = r.scale(&lc) - shifted;
        }
        r
    }

    /// Exact quotient `self / other` over ℤ, if `other` divides `self`.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        let dv = other.degree()?;
        let lc = other.leading();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dv).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dv {
                return None;
            }
            let (c, rem) = r.leading().div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            let shifted = IntPoly::new(
                core::iter::repeat_n(BigInt::zero(), dr - dv)
                    .chain(other.coeffs.iter().map(|x| x * &c))
                    .collect(),
            );
            q[dr - dv] = c;
            r = r - shifted;
        }
        Some(IntPoly::new(q))
    }

    /// Primitive gcd (positive leading coefficient) via the primitive PRS.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Square-free decomposition: `(factor, multiplicity)` pairs with
    /// primitive, pairwise coprime, square-free non-constant factors whose
    /// product (with multiplicities) equals `self` up to a constant.
    pub fn square_free_factors(&self) -> Vec<(IntPoly, usize)> {
        let f = self.primitive();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let g0 = f.gcd(&f.derivative());
        let mut sq = quo_prim(&f, &g0);
        let mut rest = g0;
        let mut mult = 1;
        while sq.degree().unwrap_or(0) > 0 {
            let t = sq.gcd(&rest);
            let exact = quo_prim(&sq, &t);
            if exact.degree().unwrap_or(0) > 0 {
                out.push((exact, mult));
            }
            rest = quo_prim(&rest, &t);
            sq = t;
            mult += 1;
        }
        out
    }

    /// Rational roots, found by testing every `±p/q` with `p | a₀`, `q | aₙ`.
    /// Intended for the small-coefficient polynomials of the case catalog;
    /// constants beyond 10⁶ are not searched.
    pub fn rational_roots(&self) -> Vec<BigRat> {
        let mut roots = Vec::new();
        let Some(deg) = self.degree() else {
            return roots;
        };
        if deg == 0 {
            return roots;
        }
        let mut f = self.primitive();
        if f.coeff(0).is_zero() {
            roots.push(BigRat::zero());
            let shift = f.coeffs.iter().take_while(|c| c.is_zero()).count();
            f = IntPoly::new(f.coeffs[shift..].to_vec());
        }
        let (Some(a0), Some(an)) = (f.coeff(0).abs().to_u64(), f.leading().abs().to_u64()) else {
            return roots;
        };
        if a0 > 1_000_000 || an > 1_000_000 || f.degree() == Some(0) {
            return roots;
        }
        for p in divisors(a0) {
            for q in divisors(an) {
                for sign in [1i64, -1] {
                    let cand = BigRat::new(BigInt::from(sign) * BigInt::from(p), BigInt::from(q));
                    if f.eval_rat(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

/// Quotient `a / b` over ℚ, returned as a primitive integer polynomial.
fn quo_prim(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return IntPoly::zero();
    };
    if da < db {
        return IntPoly::zero();
    }
    let scaled = a.scale(&b.leading().pow((da - db + 1) as u32));
    scaled.div_exact(b).expect("exact division over ℚ").primitive()
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 if show_coeff => f.write_str("*z")?,
                1 => f.write_str("z")?,
                _ if show_coeff => write!(f, "*z^{i}")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}
