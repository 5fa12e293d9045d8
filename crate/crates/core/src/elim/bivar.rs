use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::rational::gcd;
use crate::arith::{BigRat, IntPoly};

/// `Σ c_{ij} xⁱ yʲ` with big-integer coefficients; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_terms(&[(1, 0, 1)])
    }

    pub fn y() -> Self {
        Self::from_terms(&[(0, 1, 1)])
    }

    /// From `(i, j, c)` triples meaning `c·xⁱyʲ`; repeated monomials add up.
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    /// Embeds `Σ aₖ xᵏ`.
    pub fn from_x_poly(p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(k as u32, 0, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Non-negative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| gcd(&g, c))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// Coefficient of `yʲ` as a polynomial in `x`.
    pub fn coeff_of_y(&self, j: u32) -> IntPoly {
        let mut v = Vec::new();
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                let i = i as usize;
                if v.len() <= i {
                    v.resize(i + 1, BigInt::zero());
                }
                v[i] = c.clone();
            }
        }
        IntPoly::new(v)
    }

    /// Coefficient of `xⁱ` as a polynomial in `y`.
    pub fn coeff_of_x(&self, i: u32) -> IntPoly {
        self.swap_xy().coeff_of_y(i)
    }

    /// `P(y, x)`.
    pub fn swap_xy(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn derivative_y(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * BigInt::from(j));
            }
        }
        out
    }

    /// Content removed and sign fixed so that the coefficient of the
    /// highest power of `y`, read as a polynomial in `x`, has a positive
    /// leading coefficient.
    pub fn normalize(&self) -> Self {
        let Some(dy) = self.degree_y() else {
            return Self::zero();
        };
        let mut g = self.content();
        if self.coeff_of_y(dy).leading().is_negative() {
            g = -g;
        }
        Self { terms: self.terms.iter().map(|(m, c)| (*m, c / &g)).collect() }
    }

    /// Lexicographically largest monomial, `x` before `y`.
    fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Exact quotient in `ℤ[x, y]`, if `other` divides `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let ((bi, bj), bc) = other.leading()?;
        let bc = bc.clone();
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(((ri, rj), rc)) = rem.leading() {
            if ri < bi || rj < bj {
                return None;
            }
            let (c, r) = rc.div_rem(&bc);
            if !r.is_zero() {
                return None;
            }
            let (si, sj) = (ri - bi, rj - bj);
            let mut t = Self::zero();
            t.add_term(si, sj, c);
            rem = &rem - &(&t * other);
            quo = &quo + &t;
        }
        Some(quo)
    }

    pub fn eval_rat(&self, x: &BigRat, y: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRat::from_integer(c.clone()) * pow_rat(x, i) * pow_rat(y, j);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c.to_f64().unwrap_or(f64::NAN) * libm::pow(x, f64::from(i)) * libm::pow(y, f64::from(j)))
            .sum()
    }

    /// `Σ |c_{ij}|·|x|ⁱ·|y|ʲ`, the natural scale for rounding error in
    /// [`Self::eval_f64`].
    pub fn magnitude_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c.abs().to_f64().unwrap_or(f64::INFINITY) * libm::pow(libm::fabs(x), f64::from(i)) * libm::pow(libm::fabs(y), f64::from(j))
            })
            .sum()
    }

    /// `P(x₀, y)` scaled to a primitive integer polynomial in `y`.
    pub fn specialize_x(&self, x0: &BigRat) -> IntPoly {
        let Some(dx) = self.degree_x() else {
            return IntPoly::zero();
        };
        let dy = self.degree_y().unwrap_or(0) as usize;
        let mut coeffs = alloc::vec![BigInt::zero(); dy + 1];
        // Multiply through by den(x₀)^dx to stay in ℤ.
        for (&(i, j), c) in &self.terms {
            let t = c * x0.numer().pow(i) * x0.denom().pow(dx - i);
            coeffs[j as usize] += t;
        }
        IntPoly::new(coeffs).primitive()
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut ordered: Vec<(&(u32, u32), &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|t| core::cmp::Reverse((t.0 .1, t.0 .0)));
        let mut s = String::new();
        for (k, (&(i, j), c)) in ordered.into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(alloc::format!("{mag}"));
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.into()),
                    _ if latex => factors.push(alloc::format!("{var}^{{{e}}}")),
                    _ => factors.push(alloc::format!("{var}^{e}")),
                }
            }
            let _ = write!(s, "{}", factors.join(if latex { " " } else { "*" }));
        }
        s
    }
}

fn pow_rat(x: &BigRat, e: u32) -> BigRat {
    let mut acc = BigRat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}
