//! Resultants of polynomials in an eliminated variable `z` whose
//! coefficients lie in `ℤ[x, y]`, via the Sylvester matrix and fraction-free
//! (Bareiss) elimination.

use alloc::vec;
use alloc::vec::Vec;

use super::{BivarPoly, ElimError};

/// Coefficients `[c₀, c₁, …]` of `Σ cₖ zᵏ`, lowest degree first.
pub type ZPoly = Vec<BivarPoly>;

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `n`): `n` shifted
/// rows of `f` followed by `m` shifted rows of `g`, highest power first.
pub fn sylvester(f: &[BivarPoly], g: &[BivarPoly]) -> Result<Vec<Vec<BivarPoly>>, ElimError> {
    if f.len() < 2 || g.len() < 2 {
        return Err(ElimError::Degenerate("both polynomials need positive degree in z"));
    }
    if f[f.len() - 1].is_zero() || g[g.len() - 1].is_zero() {
        return Err(ElimError::Degenerate("zero leading coefficient in z"));
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, shifts) in [(f, n), (g, m)] {
        for s in 0..shifts {
            let mut row = vec![BivarPoly::zero(); size];
            for (k, c) in poly.iter().rev().enumerate() {
                row[s + k] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Exact determinant over `ℤ[x, y]` by Bareiss elimination; every
/// intermediate division is exact.
pub fn determinant(mut m: Vec<Vec<BivarPoly>>) -> BivarPoly {
    let n = m.len();
    if n == 0 {
        return BivarPoly::one();
    }
    let mut negate = false;
    let mut prev = BivarPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BivarPoly::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = BivarPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// `Res_z(f, g)`.
pub fn resultant_z(f: &[BivarPoly], g: &[BivarPoly]) -> Result<BivarPoly, ElimError> {
    Ok(determinant(sylvester(f, g)?))
}
