//! Batch verification of every catalog case: group indices, polynomials,
//! symbolic identities, analytic identities, topology, solver and fixtures.

use std::thread;

use serde::Serialize;

use modeq_core::arith::rational::{rat, to_f64};
use modeq_core::catalog::{check_omega, phi_ramification, verify_case_numeric, CaseId, CaseSpec};
use modeq_core::elim::{eliminate, poly_check, BivarPoly, ElimInput};
use modeq_core::group::{
    enumerate_cosets, side_pairings, verify_generators, CosetLimits, GeneratorFixture, GroupContext, Order, Side,
};
use modeq_core::solver::{solve_beta, SolveRequest};
use modeq_core::topology::{monodromy, surface_invariants};

use crate::domain::DomainPolygon;

/// Everything checked for one case. Fields are public so that callers can
/// inject altered fixtures.
#[derive(Clone, Debug)]
pub struct CaseFixtures {
    pub spec: CaseSpec,
    pub generators: Vec<GeneratorFixture>,
    pub polygon: DomainPolygon,
}

impl CaseFixtures {
    pub fn standard(id: CaseId) -> Self {
        Self {
            spec: modeq_core::catalog::case(id),
            generators: side_pairings(id.order(), id.p()).expect("catalog case"),
            polygon: DomainPolygon::new(id),
        }
    }

    pub fn all() -> Vec<Self> {
        CaseId::ALL.into_iter().map(Self::standard).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub samples: usize,
    pub passed: bool,
    pub cases: Vec<CaseReport>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.cases.iter().flat_map(|c| c.checks.iter()).filter(|c| !c.passed)
    }

    pub fn check_count(&self) -> usize {
        self.cases.iter().map(|c| c.checks.len()).sum()
    }
}

struct Checks {
    case: String,
    items: Vec<Check>,
}

impl Checks {
    fn push(&mut self, what: &str, passed: bool, detail: impl Into<String>) {
        self.items.push(Check { name: format!("{what} {}", self.case), passed, detail: detail.into() });
    }
}

/// Runs the cases on worker threads and merges results in input order.
pub fn verify_all(samples: usize, cases: &[CaseFixtures]) -> VerifyReport {
    let reports: Vec<CaseReport> = thread::scope(|s| {
        let handles: Vec<_> = cases.iter().map(|c| s.spawn(move || verify_case(samples, c))).collect();
        handles.into_iter().map(|h| h.join().expect("verification worker panicked")).collect()
    });
    let passed = reports.iter().all(|r| r.checks.iter().all(|c| c.passed));
    VerifyReport { samples, passed, cases: reports }
}

pub fn verify_case(samples: usize, fx: &CaseFixtures) -> CaseReport {
    let c = &fx.spec;
    let mut out = Checks { case: c.id.to_string(), items: Vec::new() };

    let ctx = GroupContext::new(c.order(), c.p());
    let mut index = None;
    match &ctx {
        Ok(ctx) => {
            let base = enumerate_cosets(ctx, Side::Base, CosetLimits::default());
            let conj = enumerate_cosets(ctx, Side::Conjugate, CosetLimits::default());
            match (&base, &conj) {
                (Ok(b), Ok(k)) => {
                    index = Some(b.index());
                    out.push(
                        "index",
                        b.index() == c.expected_index && k.index() == c.expected_index,
                        format!("base {}, conjugate {}, expected {}", b.index(), k.index(), c.expected_index),
                    );
                }
                _ => out.push("index", false, "coset enumeration failed"),
            }
            if let Ok(table) = base {
                match monodromy(&table).and_then(|t| surface_invariants(&t, ctx)) {
                    Ok(inv) => {
                        let divisors = phi_ramification(c);
                        let profiles = inv
                            .ramification_profile
                            .as_array()
                            .iter()
                            .zip(divisors.iter())
                            .all(|(p, d)| p.to_vec() == d.multiplicities());
                        let cones_ok = c.order() == Order::Infinity || inv.cone_points.is_empty();
                        out.push(
                            "topology",
                            inv.genus == 0 && inv.punctures == c.expected_punctures && profiles && cones_ok,
                            format!(
                                "genus {}, punctures {} (expected {}), cone points {:?}, profiles match divisors: {profiles}",
                                inv.genus, inv.punctures, c.expected_punctures, inv.cone_points
                            ),
                        );
                    }
                    Err(e) => out.push("topology", false, e.to_string()),
                }
            }
            let report = verify_generators(ctx, &fx.generators);
            let bad: Vec<_> = report.failures().map(|f| f.name.clone()).collect();
            out.push(
                "generators",
                bad.is_empty(),
                if bad.is_empty() { format!("{} side pairings in K", report.checks.len()) } else { format!("failed: {}", bad.join(", ")) },
            );
        }
        Err(e) => out.push("index", false, e.to_string()),
    }

    let domain = fx.polygon.check_pairings();
    out.push(
        "domain",
        domain.passed(),
        format!("{} of {} sides paired", 2 * domain.pairings.len(), fx.polygon.sides().len()),
    );

    let input = ElimInput { phi: c.phi.clone(), psi: c.psi.clone(), expected_degree: c.expected_index };
    match eliminate(&input) {
        Ok(p) => {
            let published = BivarPoly::from_terms(&c.published_polynomial);
            out.push(
                "published polynomial",
                p == published,
                if p == published { "reproduced".to_string() } else { format!("computed {p}; published {published}") },
            );
            out.push("polynomial identity", poly_check(&p, &c.phi, &c.psi), "P(phi(z), psi(z)) = 0");
            let (dx, dy) = (p.degree_x().unwrap_or(0) as usize, p.degree_y().unwrap_or(0) as usize);
            out.push(
                "degree",
                index.is_some_and(|n| dx == n && dy == n),
                format!("bidegree ({dx}, {dy}), index {index:?}"),
            );
        }
        Err(e) => out.push("published polynomial", false, e.to_string()),
    }

    let omega = check_omega(c);
    out.push(
        "omega",
        omega.passed(),
        format!("involution {}, reflection {}", omega.involution, omega.reflection),
    );

    match verify_case_numeric(c, samples) {
        Ok(r) => {
            let mult_ok = r.skipped == 0 && r.samples.iter().all(|s| s.multiplier_residual.is_some_and(|m| m <= 1e-9));
            let rad_ok = r.skipped == 0 && r.samples.iter().all(|s| s.radical_residual.is_some_and(|v| v.abs() <= 1e-12));
            out.push("multiplier", mult_ok, format!("max residual {:.3e} over {} samples", r.max_multiplier_residual, r.samples.len()));
            out.push("radical", rad_ok, format!("{}: max residual {:.3e}", c.radical, r.max_radical_residual));
        }
        Err(e) => out.push("multiplier", false, e.to_string()),
    }

    let half = rat(1, 2);
    match (c.phi.eval_rat(&half), c.psi.eval_rat(&half)) {
        (Ok(a), Ok(b)) => {
            let exact = c.radical.exact(&a, &b);
            out.push(
                "exact radical",
                exact.as_ref().is_some_and(|e| e.holds()),
                match &exact {
                    Some(e) => format!("{} = {} at alpha = {a}, beta = {b}", e.lhs, e.rhs),
                    None => "irrational at z = 1/2".to_string(),
                },
            );
            match solve_beta(&SolveRequest::new(c.a(), c.p(), to_f64(&a))) {
                Ok(s) => {
                    let err = (s.beta - to_f64(&b)).abs();
                    out.push("solver", err <= 1e-10, format!("beta {} vs {b}, error {err:.3e}", s.beta));
                }
                Err(e) => out.push("solver", false, e.to_string()),
            }
        }
        _ => out.push("exact radical", false, "pole at z = 1/2"),
    }

    CaseReport { case: out.case, checks: out.items }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_the_jacobi_quartic_fails() {
        let report = verify_all(5, &CaseFixtures::all());
        let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["published polynomial (inf,3)"]);
        assert_eq!(report.cases.len(), 4);
        assert!(report.cases.iter().all(|c| c.checks.len() == 12));
    }

    #[test]
    fn results_follow_input_order() {
        let mut cases = CaseFixtures::all();
        cases.reverse();
        let names: Vec<_> = verify_all(1, &cases).cases.into_iter().map(|c| c.case).collect();
        assert_eq!(names, ["(3,2)", "(3,3)", "(inf,3)", "(inf,2)"]);
    }

    #[test]
    fn injected_typo_is_named() {
        let mut fx = CaseFixtures::standard(CaseId::ThreeTwo);
        fx.spec.published_polynomial[0].2 = 1;
        fx.generators[1].matrix = fx.generators[2].matrix.clone();
        let report = verify_all(1, &[fx]);
        let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["generators (3,2)", "published polynomial (3,2)"]);
        assert!(report.failures().next().unwrap().detail.contains("A2"));
    }

    #[test]
    fn broken_parametrization_is_caught() {
        let mut fx = CaseFixtures::standard(CaseId::ThreeThree);
        fx.spec.omega = modeq_core::catalog::RationalMap::from_i64(&[1, -1], &[1, 1]).unwrap();
        let report = verify_all(3, &[fx]);
        assert!(report.failures().any(|c| c.name == "omega (3,3)"));
    }
}
