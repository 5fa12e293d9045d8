//! Radical identities between `α` and `β`, and the sampled end-to-end check
//! `m_a(ψ(z)) = p·m_a(φ(z))`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::rational::{int, nth_root_exact, rat, to_f64};
use crate::arith::BigRat;
use crate::hgf::{multiplier_split, HgfParams, NumericError};

use super::CaseSpec;

pub const MULTIPLIER_TOLERANCE: f64 = 1e-9;
pub const RADICAL_TOLERANCE: f64 = 1e-12;

/// The algebraic relation between `α` and `β` carried by each case, with
/// real principal roots throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalIdentity {
    /// `√β = (1 − √(1−α))/(1 + √(1−α))`.
    Classical,
    /// `(αβ)^{1/4} + ((1−α)(1−β))^{1/4} = 1`.
    Legendre,
    /// `(αβ)^{1/3} + ((1−α)(1−β))^{1/3} = 1`.
    CubicSum,
    /// `(1−α)^{1/3} = (1 − β^{1/3})/(1 + 2β^{1/3})`.
    CubicRatio,
}

impl fmt::Display for RadicalIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadicalIdentity::Classical => "classical",
            RadicalIdentity::Legendre => "legendre",
            RadicalIdentity::CubicSum => "cubic-sum",
            RadicalIdentity::CubicRatio => "cubic-ratio",
        })
    }
}

/// Both sides of an identity evaluated in exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRadical {
    pub lhs: BigRat,
    pub rhs: BigRat,
    /// The two summands for the sum-type identities.
    pub terms: Option<(BigRat, BigRat)>,
}

impl ExactRadical {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl RadicalIdentity {
    /// `lhs − rhs` in binary64; `ac = 1 − α`, `bc = 1 − β` are passed
    /// separately so they keep full relative precision.
    pub fn residual(self, alpha: f64, beta: f64, ac: f64, bc: f64) -> f64 {
        match self {
            RadicalIdentity::Classical => {
                let s = libm::sqrt(ac);
                libm::sqrt(beta) - alpha / ((1.0 + s) * (1.0 + s))
            }
            RadicalIdentity::Legendre => {
                libm::sqrt(libm::sqrt(alpha * beta)) + libm::sqrt(libm::sqrt(ac * bc)) - 1.0
            }
            RadicalIdentity::CubicSum => libm::cbrt(alpha * beta) + libm::cbrt(ac * bc) - 1.0,
            RadicalIdentity::CubicRatio => {
                let t = libm::cbrt(beta);
                libm::cbrt(ac) - (1.0 - t) / (1.0 + 2.0 * t)
            }
        }
    }

    /// Exact evaluation, available when every root involved is rational.
    pub fn exact(self, alpha: &BigRat, beta: &BigRat) -> Option<ExactRadical> {
        let one = BigRat::one();
        let ac = &one - alpha;
        let bc = &one - beta;
        match self {
            RadicalIdentity::Classical => {
                let s = nth_root_exact(&ac, 2)?;
                let lhs = nth_root_exact(beta, 2)?;
                let rhs = (&one - &s) / (&one + &s);
                Some(ExactRadical { lhs, rhs, terms: None })
            }
            RadicalIdentity::Legendre | RadicalIdentity::CubicSum => {
                let k = if self == RadicalIdentity::Legendre { 4 } else { 3 };
                let u = nth_root_exact(&(alpha * beta), k)?;
                let v = nth_root_exact(&(&ac * &bc), k)?;
                Some(ExactRadical { lhs: &u + &v, rhs: one, terms: Some((u, v)) })
            }
            RadicalIdentity::CubicRatio => {
                let lhs = nth_root_exact(&ac, 3)?;
                let t = nth_root_exact(beta, 3)?;
                let den = &one + &(&t * int(2));
                if den.is_zero() {
                    return None;
                }
                Some(ExactRadical { lhs, rhs: (&one - &t) / den, terms: None })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseSample {
    pub z: BigRat,
    pub alpha: f64,
    pub beta: f64,
    /// `|m_a(β) − p·m_a(α)| / (p·m_a(α))`; `None` when the sample was
    /// skipped because `α` or `β` left the open unit interval.
    pub multiplier_residual: Option<f64>,
    pub radical_residual: Option<f64>,
}

impl CaseSample {
    pub fn passed(&self) -> bool {
        match (self.multiplier_residual, self.radical_residual) {
            (Some(m), Some(r)) => m <= MULTIPLIER_TOLERANCE && r.abs() <= RADICAL_TOLERANCE,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericReport {
    pub samples: Vec<CaseSample>,
    pub skipped: usize,
    pub max_multiplier_residual: f64,
    pub max_radical_residual: f64,
}

impl NumericReport {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(CaseSample::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseSample> {
        self.samples.iter().filter(|s| !s.passed())
    }
}

/// Samples `z = k/(samples+1)`, `k = 1..=samples`. `α`, `β` and their
/// complements are computed exactly before conversion to binary64.
pub fn verify_case_numeric(case: &CaseSpec, samples: usize) -> Result<NumericReport, NumericError> {
    let params = HgfParams::new(case.a());
    let p = f64::from(case.p());
    let mut out = Vec::with_capacity(samples);
    let mut skipped = 0;
    let (mut max_m, mut max_r) = (0.0f64, 0.0f64);
    let one = BigRat::one();
    for k in 1..=samples {
        let z = rat(k as i64, samples as i64 + 1);
        let (Ok(a), Ok(b)) = (case.phi.eval_rat(&z), case.psi.eval_rat(&z)) else {
            skipped += 1;
            continue;
        };
        let inside = |x: &BigRat| *x > BigRat::zero() && *x < one;
        let (af, bf) = (to_f64(&a), to_f64(&b));
        if !inside(&a) || !inside(&b) {
            skipped += 1;
            out.push(CaseSample { z, alpha: af, beta: bf, multiplier_residual: None, radical_residual: None });
            continue;
        }
        let (ac, bc) = (to_f64(&(&one - &a)), to_f64(&(&one - &b)));
        let target = p * multiplier_split(&params, af, ac)?;
        let m = libm::fabs(multiplier_split(&params, bf, bc)? - target) / target;
        let r = case.radical.residual(af, bf, ac, bc);
        max_m = max_m.max(m);
        max_r = max_r.max(libm::fabs(r));
        out.push(CaseSample { z, alpha: af, beta: bf, multiplier_residual: Some(m), radical_residual: Some(r) });
    }
    Ok(NumericReport { samples: out, skipped, max_multiplier_residual: max_m, max_radical_residual: max_r })
}
