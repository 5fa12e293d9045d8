//! The four solved cases `(q, p) ∈ {(∞,2), (∞,3), (3,3), (3,2)}`: the
//! parametrizations `α = φ(z)`, `β = ψ(z)`, the involution `ω` and the
//! algebraic identities relating `α` and `β`.

mod divisor;
mod map;
mod radical;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::arith::BigRat;
use crate::group::Order;

pub use divisor::{fibre, ramification, Divisor, DivisorPoint, FibreValue};
pub use map::RationalMap;
pub use radical::{
    verify_case_numeric, CaseSample, ExactRadical, NumericReport, RadicalIdentity,
    MULTIPLIER_TOLERANCE, RADICAL_TOLERANCE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at z = {0}")]
    Pole(BigRat),
    #[error("no catalog entry for `{0}`")]
    UnknownCase(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    InfTwo,
    InfThree,
    ThreeThree,
    ThreeTwo,
}

impl CaseId {
    pub const ALL: [CaseId; 4] = [CaseId::InfTwo, CaseId::InfThree, CaseId::ThreeThree, CaseId::ThreeTwo];

    pub fn order(self) -> Order {
        match self {
            CaseId::InfTwo | CaseId::InfThree => Order::Infinity,
            CaseId::ThreeThree | CaseId::ThreeTwo => Order::Finite(3),
        }
    }

    pub fn p(self) -> u32 {
        match self {
            CaseId::InfTwo | CaseId::ThreeTwo => 2,
            CaseId::InfThree | CaseId::ThreeThree => 3,
        }
    }

    pub fn from_order(order: Order, p: u32) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.order() == order && c.p() == p)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.order(), self.p())
    }
}

/// Accepts `inf,2`, `(3,3)`, `inf:3`, `3/2` and similar.
impl FromStr for CaseId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::UnknownCase(s.into());
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (q, p) = inner.split_once([',', ':', '/', '-']).ok_or_else(bad)?;
        let order: Order = q.trim().parse().map_err(|_| bad())?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        Self::from_order(order, p).ok_or_else(bad)
    }
}

#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub id: CaseId,
    pub phi: RationalMap,
    pub psi: RationalMap,
    pub omega: RationalMap,
    /// `ω` obtained by solving `ψ = 1 − φ∘ω` for an involution rather than
    /// taken from a stated normalization.
    pub omega_derived: bool,
    pub expected_index: usize,
    pub expected_punctures: usize,
    /// Published modular polynomial as `(i, j, c)` for `c·xⁱyʲ`.
    pub published_polynomial: Vec<(u32, u32, i64)>,
    pub radical: RadicalIdentity,
}

impl CaseSpec {
    pub fn order(&self) -> Order {
        self.id.order()
    }

    pub fn p(&self) -> u32 {
        self.id.p()
    }

    /// Hypergeometric parameter `a` as a float.
    pub fn a(&self) -> f64 {
        self.order().a()
    }
}

fn rm(num: &[i64], den: &[i64]) -> RationalMap {
    RationalMap::from_i64(num, den).expect("nonzero denominator")
}

pub fn case(id: CaseId) -> CaseSpec {
    match id {
        CaseId::InfTwo => CaseSpec {
            id,
            phi: rm(&[1, 0, -1], &[1]),
            psi: rm(&[1, -2, 1], &[1, 2, 1]),
            omega: rm(&[1, -1], &[1, 1]),
            omega_derived: true,
            expected_index: 2,
            expected_punctures: 4,
            published_polynomial: alloc::vec![(0, 1, -16), (1, 1, 16), (2, 0, 1), (2, 1, -2), (2, 2, 1)],
            radical: RadicalIdentity::Classical,
        },
        CaseId::InfThree => CaseSpec {
            id,
            // z(z+2)³/(2z+1)³ and z³(z+2)/(2z+1).
            phi: rm(&[0, 8, 12, 6, 1], &[1, 6, 12, 8]),
            psi: rm(&[0, 0, 0, 2, 1], &[1, 2]),
            omega: rm(&[1, -1], &[1, 2]),
            omega_derived: false,
            expected_index: 4,
            expected_punctures: 6,
            published_polynomial: alloc::vec![(0, 4, 1), (1, 1, -2), (3, 3, 2), (4, 0, -1)],
            radical: RadicalIdentity::Legendre,
        },
        CaseId::ThreeThree => CaseSpec {
            id,
            // 1 − z³ and (1−z)³/(1+2z)³.
            phi: rm(&[1, 0, 0, -1], &[1]),
            psi: rm(&[1, -3, 3, -1], &[1, 6, 12, 8]),
            omega: rm(&[1, -1], &[1, 2]),
            omega_derived: false,
            expected_index: 3,
            expected_punctures: 4,
            published_polynomial: alloc::vec![
                (0, 1, -729), (0, 2, 1458), (0, 3, -729),
                (1, 1, 1215), (1, 2, -3159), (1, 3, 1944),
                (2, 1, -513), (2, 2, 1512), (2, 3, -1728),
                (3, 0, 1), (3, 1, 24), (3, 2, 192), (3, 3, 512),
            ],
            radical: RadicalIdentity::CubicRatio,
        },
        CaseId::ThreeTwo => CaseSpec {
            id,
            // z(z+3)²/(2(z+1)³) and z²(z+3)/4.
            phi: rm(&[0, 9, 6, 1], &[2, 6, 6, 2]),
            psi: rm(&[0, 0, 3, 1], &[4]),
            omega: rm(&[1, -1], &[1, 1]),
            omega_derived: false,
            expected_index: 3,
            expected_punctures: 4,
            published_polynomial: alloc::vec![
                (0, 3, -1),
                (1, 1, 27), (1, 2, -30), (1, 3, 6),
                (2, 1, -30), (2, 2, 39), (2, 3, -12),
                (3, 0, -1), (3, 1, 6), (3, 2, -12), (3, 3, 8),
            ],
            radical: RadicalIdentity::CubicSum,
        },
    }
}

pub fn catalog() -> Vec<CaseSpec> {
    CaseId::ALL.into_iter().map(case).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaReport {
    /// `ω∘ω = id`.
    pub involution: bool,
    /// `ψ = 1 − φ∘ω`.
    pub reflection: bool,
}

impl OmegaReport {
    pub fn passed(&self) -> bool {
        self.involution && self.reflection
    }
}

/// Both identities are decided by comparing reduced rational functions.
pub fn check_omega(case: &CaseSpec) -> OmegaReport {
    OmegaReport {
        involution: case.omega.compose(&case.omega).is_identity(),
        reflection: case.phi.compose(&case.omega).one_minus() == case.psi,
    }
}

/// `[(φ)_0, (φ)_1, (φ)_∞]`.
pub fn phi_ramification(case: &CaseSpec) -> [Divisor; 3] {
    ramification(&case.phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use alloc::vec;

    #[test]
    fn case_ids_parse() {
        assert_eq!("inf,2".parse::<CaseId>().unwrap(), CaseId::InfTwo);
        assert_eq!("(3,3)".parse::<CaseId>().unwrap(), CaseId::ThreeThree);
        assert_eq!("3:2".parse::<CaseId>().unwrap(), CaseId::ThreeTwo);
        assert!("3,5".parse::<CaseId>().is_err());
        assert!("bogus".parse::<CaseId>().is_err());
        for id in CaseId::ALL {
            assert_eq!(alloc::format!("{id}").parse::<CaseId>().unwrap(), id);
        }
    }

    #[test]
    fn exact_evaluations() {
        let c = case(CaseId::ThreeTwo);
        assert_eq!(c.phi.eval_rat(&rat(1, 2)).unwrap(), rat(49, 54));
        assert_eq!(c.psi.eval_rat(&rat(1, 2)).unwrap(), rat(7, 32));
        assert_eq!(case(CaseId::InfTwo).phi.eval_rat(&rat(1, 1)).unwrap(), rat(0, 1));
    }

    #[test]
    fn omega_identities() {
        for c in catalog() {
            assert!(check_omega(&c).passed(), "{}", c.id);
        }
        let mut broken = case(CaseId::ThreeThree);
        broken.omega = rm(&[1, -1], &[1, 1]);
        let r = check_omega(&broken);
        assert!(r.involution && !r.reflection);
    }

    #[test]
    fn degrees_match_index() {
        for c in catalog() {
            assert_eq!(c.phi.degree(), c.expected_index);
            assert_eq!(c.psi.degree(), c.expected_index);
        }
    }

    #[test]
    fn stated_divisors() {
        let [_, _, inf] = phi_ramification(&case(CaseId::InfThree));
        assert_eq!(inf.entries, vec![(DivisorPoint::Rational(rat(-1, 2)), 3), (DivisorPoint::Infinity, 1)]);
        let [zero, _, _] = phi_ramification(&case(CaseId::ThreeTwo));
        assert_eq!(zero.entries, vec![(DivisorPoint::Rational(rat(-3, 1)), 2), (DivisorPoint::Rational(rat(0, 1)), 1)]);
        let [_, one, _] = phi_ramification(&case(CaseId::InfTwo));
        assert_eq!(one.entries, vec![(DivisorPoint::Rational(rat(0, 1)), 2)]);
    }

    #[test]
    fn maps_preserve_unit_interval() {
        for c in catalog() {
            for f in [&c.phi, &c.psi] {
                let vals: Vec<f64> = (1..200).map(|k| f.eval_f64(k as f64 / 200.0)).collect();
                assert!(vals.iter().all(|v| *v > 0.0 && *v < 1.0), "{}", c.id);
                let up = vals.windows(2).all(|w| w[1] > w[0]);
                let down = vals.windows(2).all(|w| w[1] < w[0]);
                assert!(up || down, "{}", c.id);
            }
        }
    }
}
