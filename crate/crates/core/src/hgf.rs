//! Binary64 evaluation of the zero-balanced hypergeometric function
//! `F_a(x) = ₂F₁(a, 1−a; 1; x)` on `[0, 1)` and of the quantities built on
//! it: the multiplier `m_a(x) = F_a(1−x)/F_a(x)`, the Grötzsch modulus
//! `μ(r)` and the complete elliptic integral `K(r)`.
//!
//! For `x ≤ 1/2` the defining series is summed directly. Above `1/2` the
//! logarithmic connection formula at `x = 1` is used:
//!
//! `F_a(x) = sin(πa)/π · Σ cₙ [2ψ(n+1) − ψ(a+n) − ψ(1−a+n) − ln(1−x)] (1−x)ⁿ`
//!
//! with `cₙ = (a)ₙ(1−a)ₙ/(n!)²`. Both series have ratio at most `1/2` at the
//! crossover.

use core::f64::consts::{FRAC_PI_2, PI};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum NumericError {
    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),
    #[error("argument {0} outside the admissible range")]
    OutOfRange(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HgfParams {
    pub a: f64,
    pub tol: f64,
    pub max_terms: usize,
}

impl HgfParams {
    pub fn new(a: f64) -> Self {
        Self { a, tol: 1e-17, max_terms: 2000 }
    }

    /// Order `q = 1/(1 − 2a)`; infinite at `a = 1/2`.
    pub fn order(&self) -> f64 {
        1.0 / (1.0 - 2.0 * self.a)
    }

    fn check(&self) -> Result<(), NumericError> {
        if !(self.a > 0.0 && self.a <= 0.5) {
            return Err(NumericError::OutOfRange(self.a));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    DirectSeries,
    LogConnection,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub terms_used: usize,
    pub branch: Branch,
}

/// `F_a(x)` for `0 ≤ x < 1`.
pub fn f21(params: &HgfParams, x: f64) -> Result<EvalResult, NumericError> {
    f21_split(params, x, 1.0 - x)
}

/// `F_a(x)` where the caller also supplies `y = 1 − x`, so that points close
/// to `1` keep full relative accuracy in `1 − x`.
pub fn f21_split(params: &HgfParams, x: f64, y: f64) -> Result<EvalResult, NumericError> {
    params.check()?;
    if !(0.0..1.0).contains(&x) || !(y > 0.0 && y <= 1.0) {
        return Err(NumericError::OutOfRange(x));
    }
    if x <= 0.5 {
        direct_series(params, x)
    } else {
        log_connection(params, y)
    }
}

/// The defining series, valid for `|x| < 1`; used directly for `x ≤ 1/2`.
pub fn direct_series(params: &HgfParams, x: f64) -> Result<EvalResult, NumericError> {
    let a = params.a;
    let b = 1.0 - a;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..params.max_terms {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + 1.0)) * x;
        sum += term;
        if term.abs() <= params.tol * sum.abs() {
            return Ok(EvalResult { value: sum, terms_used: n + 2, branch: Branch::DirectSeries });
        }
    }
    Err(NumericError::NonConvergence(params.max_terms))
}

/// Expansion about `x = 1` in powers of `y = 1 − x`, for `0 < y < 1`.
pub fn log_connection(params: &HgfParams, y: f64) -> Result<EvalResult, NumericError> {
    let a = params.a;
    let b = 1.0 - a;
    let ln_y = libm::log(y);
    let mut c = 1.0;
    let mut psi_one = digamma(1.0);
    let mut psi_a = digamma(a);
    let mut psi_b = digamma(b);
    let mut yn = 1.0;
    let mut sum = 0.0;
    for n in 0..params.max_terms {
        let nf = n as f64;
        let term = c * (2.0 * psi_one - psi_a - psi_b - ln_y) * yn;
        sum += term;
        if n > 0 && term.abs() <= params.tol * sum.abs() {
            let value = libm::sin(PI * a) / PI * sum;
            return Ok(EvalResult { value, terms_used: n + 1, branch: Branch::LogConnection });
        }
        c *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + 1.0));
        psi_one += 1.0 / (nf + 1.0);
        psi_a += 1.0 / (a + nf);
        psi_b += 1.0 / (b + nf);
        yn *= y;
    }
    Err(NumericError::NonConvergence(params.max_terms))
}

/// Digamma `ψ(x)` for `x > 0`: upward shift above 8, then the asymptotic
/// series in `1/x²`.
pub fn digamma(mut x: f64) -> f64 {
    let mut acc = 0.0;
    while x < 8.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    // Bernoulli terms B_{2k}/(2k) for k = 1..7.
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let mut series = 0.0;
    for &ck in C.iter().rev() {
        series = (series + ck) * inv2;
    }
    acc + libm::log(x) - 0.5 / x - series
}

/// `m_a(x) = F_a(1−x)/F_a(x)` for `0 < x < 1`.
pub fn multiplier(params: &HgfParams, x: f64) -> Result<f64, NumericError> {
    multiplier_split(params, x, 1.0 - x)
}

/// [`multiplier`] with the complement `y = 1 − x` supplied exactly.
pub fn multiplier_split(params: &HgfParams, x: f64, y: f64) -> Result<f64, NumericError> {
    if !(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0) {
        return Err(NumericError::OutOfRange(x));
    }
    let num = f21_split(params, y, x)?.value;
    let den = f21_split(params, x, y)?.value;
    Ok(num / den)
}

/// Grötzsch ring modulus `μ(r) = (π/2)·K(√(1−r²))/K(r)`.
pub fn mu(r: f64) -> Result<f64, NumericError> {
    if !(r > 0.0 && r < 1.0) {
        return Err(NumericError::OutOfRange(r));
    }
    let m = multiplier_split(&HgfParams::new(0.5), r * r, (1.0 - r) * (1.0 + r))?;
    Ok(FRAC_PI_2 * m)
}

/// Complete elliptic integral of the first kind, `K(r) = (π/2)·F_{1/2}(r²)`.
pub fn ell_k(r: f64) -> Result<f64, NumericError> {
    if !(0.0..1.0).contains(&r) {
        return Err(NumericError::OutOfRange(r));
    }
    let v = f21_split(&HgfParams::new(0.5), r * r, (1.0 - r) * (1.0 + r))?;
    Ok(FRAC_PI_2 * v.value)
}
