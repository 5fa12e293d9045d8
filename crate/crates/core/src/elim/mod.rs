//! Elimination of the parameter `z` from `x = φ(z)`, `y = ψ(z)`:
//! `P(x, y) = Res_z(N_φ − x·D_φ, N_ψ − y·D_ψ)`, made primitive and
//! sign-normalized.

mod bivar;
mod resultant;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{BigRat, IntPoly};
use crate::catalog::RationalMap;

pub use bivar::BivarPoly;
pub use resultant::{determinant, resultant_z, sylvester, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElimError {
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("expected bidegree ({expected}, {expected}), got ({deg_x}, {deg_y})")]
    DegreeMismatch { expected: usize, deg_x: usize, deg_y: usize },
}

#[derive(Clone, Debug)]
pub struct ElimInput {
    pub phi: RationalMap,
    pub psi: RationalMap,
    pub expected_degree: usize,
}

/// `N − t·D` as a polynomial in `z` with coefficients in `ℤ[x, y]`, where
/// `t` is `x` or `y`.
fn fibre_poly(m: &RationalMap, t: &BivarPoly) -> ZPoly {
    let n = m.degree();
    (0..=n)
        .map(|k| {
            let a = BivarPoly::constant(m.numerator().coeff(k));
            let b = &BivarPoly::constant(m.denominator().coeff(k)) * t;
            &a - &b
        })
        .collect()
}

/// The primitive, sign-normalized resultant with `deg_x P = deg_y P = n`.
pub fn eliminate(input: &ElimInput) -> Result<BivarPoly, ElimError> {
    let f = fibre_poly(&input.phi, &BivarPoly::x());
    let g = fibre_poly(&input.psi, &BivarPoly::y());
    let p = resultant_z(&f, &g)?.normalize();
    let deg_x = p.degree_x().unwrap_or(0) as usize;
    let deg_y = p.degree_y().unwrap_or(0) as usize;
    if deg_x != input.expected_degree || deg_y != input.expected_degree {
        return Err(ElimError::DegreeMismatch { expected: input.expected_degree, deg_x, deg_y });
    }
    Ok(p)
}

/// Whether `P(φ(z), ψ(z))` vanishes identically, decided on the integer
/// polynomial obtained by clearing denominators.
pub fn poly_check(p: &BivarPoly, phi: &RationalMap, psi: &RationalMap) -> bool {
    let (Some(dx), Some(dy)) = (p.degree_x(), p.degree_y()) else {
        return p.is_zero();
    };
    let pow = |q: &IntPoly, e: u32| q.pow(e);
    let mut acc = IntPoly::zero();
    for (i, j, c) in p.terms() {
        let term = &(&pow(phi.numerator(), i) * &pow(phi.denominator(), dx - i))
            * &(&pow(psi.numerator(), j) * &pow(psi.denominator(), dy - j));
        acc = &acc + &term.scale(c);
    }
    acc.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub deg_x: usize,
    pub deg_y: usize,
    pub content: BigInt,
    /// `Res_y(P, ∂P/∂y) ≠ 0`, i.e. `gcd(P, ∂P/∂y)` is trivial in `ℚ(x)[y]`.
    pub square_free_in_y: bool,
    /// Leading coefficient `a₀(x)` of `P` in `y` is nonzero.
    pub leading_y_nonzero: bool,
    /// Leading coefficient `b₀(y)` of `P` in `x` is nonzero.
    pub leading_x_nonzero: bool,
}

/// Degrees, content and square-freeness; irreducibility is not decided.
pub fn square_free_and_degree_report(p: &BivarPoly) -> StructureReport {
    let deg_x = p.degree_x().unwrap_or(0);
    let deg_y = p.degree_y().unwrap_or(0);
    let square_free_in_y = match deg_y {
        0 => !p.is_zero(),
        _ => {
            let as_y = |q: &BivarPoly, d: u32| -> ZPoly {
                (0..=d).map(|j| BivarPoly::from_x_poly(&q.coeff_of_y(j))).collect()
            };
            let dp = p.derivative_y();
            resultant_z(&as_y(p, deg_y), &as_y(&dp, deg_y - 1)).is_ok_and(|r| !r.is_zero())
        }
    };
    StructureReport {
        deg_x: deg_x as usize,
        deg_y: deg_y as usize,
        content: p.content(),
        square_free_in_y,
        leading_y_nonzero: !p.coeff_of_y(deg_y).is_zero(),
        leading_x_nonzero: !p.coeff_of_x(deg_x).is_zero(),
    }
}

/// Real roots of `P(x₀, y)` in the open interval `(0, 1)`, ascending.
pub fn unit_interval_roots(p: &BivarPoly, x0: &BigRat) -> Vec<f64> {
    let q = p.specialize_x(x0);
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = q
        .square_free_factors()
        .into_iter()
        .fold(IntPoly::one(), |acc, (f, _)| &acc * &f);
    real_roots_in_unit_interval(&sf)
}

fn real_roots_in_unit_interval(f: &IntPoly) -> Vec<f64> {
    const GRID: usize = 4096;
    let mut roots = Vec::new();
    let mut prev_x = 0.0;
    let mut prev_v = f.eval_f64(0.0);
    for k in 1..=GRID {
        let x = k as f64 / GRID as f64;
        let v = f.eval_f64(x);
        if k < GRID && f.eval_rat(&BigRat::new(BigInt::from(k), BigInt::from(GRID))).is_zero() {
            roots.push(x);
        } else if prev_v != 0.0 && v != 0.0 && (prev_v < 0.0) != (v < 0.0) {
            let (mut lo, mut hi, mut flo) = (prev_x, x, prev_v);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = f.eval_f64(mid);
                if (fm < 0.0) == (flo < 0.0) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_v = v;
        if v == 0.0 {
            prev_v = f.eval_f64(x + 0.5 / GRID as f64);
        }
    }
    roots
}
