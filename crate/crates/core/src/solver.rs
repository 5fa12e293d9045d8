//! Numeric solution of `m_a(β) = p·m_a(α)` for `β ∈ (0, 1)`.
//!
//! `ln m_a` is strictly decreasing on `(0, 1)`, so the residual
//! `ln m_a(β) − ln(p·m_a(α))` has exactly one sign change. The search runs
//! in the logit variable `t = ln(β/(1−β))`, where both endpoints of the
//! bracket are at comparable distance; bisection shrinks the bracket and
//! an Illinois false-position step finishes the root.

use thiserror::Error;

use crate::hgf::{multiplier_split, HgfParams, NumericError};

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("target multiplier {0} is outside the bracket")]
    NotBracketed(f64),
    #[error("no convergence after {0} iterations")]
    NonConvergence(usize),
    #[error("invalid request: {0}")]
    InvalidRequest(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveRequest {
    pub a: f64,
    pub p: u32,
    pub alpha: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl SolveRequest {
    pub fn new(a: f64, p: u32, alpha: f64) -> Self {
        Self { a, p, alpha, tol: 1e-11, max_iter: 200 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Solution {
    pub beta: f64,
    /// `|m_a(β) − p·m_a(α)| / (p·m_a(α))`.
    pub residual: f64,
    pub iterations: usize,
}

const BRACKET_LO: f64 = 1e-12;
const BRACKET_HI: f64 = 1.0 - 1e-12;
const BISECTION_STEPS: usize = 40;

/// `β = 1/(1 + e^{−t})` and `1 − β`, both without cancellation.
fn from_logit(t: f64) -> (f64, f64) {
    let e = libm::exp(-libm::fabs(t));
    let small = e / (1.0 + e);
    let large = 1.0 / (1.0 + e);
    if t >= 0.0 {
        (large, small)
    } else {
        (small, large)
    }
}

fn logit(x: f64) -> f64 {
    libm::log(x / (1.0 - x))
}

/// Principal solution `β ∈ (0, 1)` of the degree-`p` modular equation with
/// parameter `a`. `p = 1` is accepted and returns `β = α`.
pub fn solve_beta(req: &SolveRequest) -> Result<Solution, SolveError> {
    if req.p == 0 {
        return Err(SolveError::InvalidRequest("p must be positive"));
    }
    if !(req.alpha > 0.0 && req.alpha < 1.0) {
        return Err(SolveError::InvalidRequest("alpha must lie in (0, 1)"));
    }
    let params = HgfParams::new(req.a);
    let target = f64::from(req.p) * multiplier_split(&params, req.alpha, 1.0 - req.alpha)?;
    let ln_target = libm::log(target);
    let residual_at = |t: f64| -> Result<f64, SolveError> {
        let (b, c) = from_logit(t);
        Ok(libm::log(multiplier_split(&params, b, c)?) - ln_target)
    };
    let relative = |t: f64| -> Result<f64, SolveError> {
        let (b, c) = from_logit(t);
        Ok(libm::fabs(multiplier_split(&params, b, c)? - target) / target)
    };

    let (mut lo, mut hi) = (logit(BRACKET_LO), logit(BRACKET_HI));
    let (mut f_lo, mut f_hi) = (residual_at(lo)?, residual_at(hi)?);
    if f_lo < 0.0 || f_hi > 0.0 {
        return Err(SolveError::NotBracketed(target));
    }

    let mut iterations = 0;
    let mut side = 0i8;
    while iterations < req.max_iter {
        iterations += 1;
        let mid = if iterations <= BISECTION_STEPS {
            0.5 * (lo + hi)
        } else {
            (lo * f_hi - hi * f_lo) / (f_hi - f_lo)
        };
        let f_mid = residual_at(mid)?;
        if f_mid == 0.0 || libm::fabs(f_mid) <= 1e-3 * req.tol {
            return finish(mid, iterations, req, relative);
        }
        if f_mid > 0.0 {
            lo = mid;
            f_lo = f_mid;
            if side == 1 && iterations > BISECTION_STEPS {
                f_hi *= 0.5;
            }
            side = 1;
        } else {
            hi = mid;
            f_hi = f_mid;
            if side == -1 && iterations > BISECTION_STEPS {
                f_lo *= 0.5;
            }
            side = -1;
        }
        if hi - lo <= 1e-15 * (1.0 + libm::fabs(lo)) {
            return finish(0.5 * (lo + hi), iterations, req, relative);
        }
    }
    Err(SolveError::NonConvergence(req.max_iter))
}

fn finish(
    t: f64,
    iterations: usize,
    req: &SolveRequest,
    relative: impl Fn(f64) -> Result<f64, SolveError>,
) -> Result<Solution, SolveError> {
    let residual = relative(t)?;
    if residual > req.tol {
        return Err(SolveError::NonConvergence(iterations));
    }
    Ok(Solution { beta: from_logit(t).0, residual, iterations })
}

/// Closed-form degree-2 solution for `a = 1/2`:
/// `β = ((1 − √(1−α))/(1 + √(1−α)))²`, written as `(α/(1 + √(1−α))²)²`.
pub fn classical_beta(alpha: f64) -> f64 {
    let s = 1.0 + libm::sqrt(1.0 - alpha);
    let k = alpha / (s * s);
    k * k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beta(a: f64, p: u32, alpha: f64) -> f64 {
        solve_beta(&SolveRequest::new(a, p, alpha)).unwrap().beta
    }

    #[test]
    fn closed_form_values() {
        let half = (1.0 - libm::sqrt(0.5)) / (1.0 + libm::sqrt(0.5));
        assert!((classical_beta(0.5) - half * half).abs() < 1e-16);
        assert!((classical_beta(0.75) - 1.0 / 9.0).abs() < 1e-16);
    }

    #[test]
    fn agrees_with_classical_on_grid() {
        for k in 1..=50 {
            let alpha = k as f64 / 51.0;
            let b = beta(0.5, 2, alpha);
            assert!((b - classical_beta(alpha)).abs() <= 1e-10, "alpha={alpha}");
        }
    }

    #[test]
    fn rational_solutions() {
        assert!((beta(1.0 / 3.0, 3, 7.0 / 8.0) - 1.0 / 64.0).abs() <= 1e-10);
        assert!((beta(1.0 / 3.0, 2, 49.0 / 54.0) - 7.0 / 32.0).abs() <= 1e-10);
    }

    #[test]
    fn degree_one_is_identity() {
        for a in [0.5, 1.0 / 3.0] {
            let b = beta(a, 1, 0.5);
            assert!((b - 0.5).abs() < 1e-12, "{b}");
        }
    }

    #[test]
    fn composition_of_degrees() {
        for alpha in [0.2, 0.5, 0.9] {
            let twice = beta(0.5, 2, beta(0.5, 2, alpha));
            assert!((twice - beta(0.5, 4, alpha)).abs() <= 1e-8, "alpha={alpha}");
        }
    }

    #[test]
    fn residual_within_tolerance() {
        let s = solve_beta(&SolveRequest::new(1.0 / 3.0, 2, 0.3)).unwrap();
        assert!(s.residual <= 1e-11);
        assert!(s.iterations <= 200);
    }

    #[test]
    fn increasing_in_alpha() {
        for (a, p) in [(0.5, 2), (0.5, 3), (1.0 / 3.0, 2), (1.0 / 3.0, 3)] {
            let mut prev = 0.0;
            for k in 1..=40 {
                let b = beta(a, p, k as f64 / 41.0);
                assert!(b > prev, "a={a} p={p} k={k}");
                prev = b;
            }
        }
        let mut prev = 0.0;
        for k in 1..=40 {
            let b = classical_beta(k as f64 / 41.0);
            assert!(b > prev && b < k as f64 / 41.0);
            prev = b;
        }
    }

    #[test]
    fn invalid_requests() {
        assert!(matches!(solve_beta(&SolveRequest::new(0.5, 2, 1.0)), Err(SolveError::InvalidRequest(_))));
        assert!(matches!(solve_beta(&SolveRequest::new(0.5, 0, 0.5)), Err(SolveError::InvalidRequest(_))));
        let starved = SolveRequest { max_iter: 3, ..SolveRequest::new(0.5, 2, 0.5) };
        assert_eq!(solve_beta(&starved), Err(SolveError::NonConvergence(3)));
    }
}
