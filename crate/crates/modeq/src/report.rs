//! JSON payloads of the subcommands and number formatting.
//!
//! Exact quantities are emitted as strings (`"49/54"`, `"-3√3"`), floats as
//! JSON numbers rounded to the configured number of significant digits.

use serde::Serialize;

use modeq_core::catalog::Divisor;
use modeq_core::elim::{BivarPoly, StructureReport};
use modeq_core::group::{CosetTable, Gen, MoebiusMat};
use modeq_core::topology::{PermutationTriple, SurfaceInvariants};

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: u32) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let d = digits.clamp(1, 17) as usize;
    format!("{:.*e}", d - 1, x).parse().unwrap_or(x)
}

/// Human rendering of a rounded float: positional in a moderate range,
/// scientific otherwise.
pub fn fmt_num(x: f64, digits: u32) -> String {
    let r = round_sig(x, digits);
    let m = r.abs();
    if r != 0.0 && r.is_finite() && !(1e-4..1e15).contains(&m) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

pub fn matrix_strings(m: &MoebiusMat) -> [String; 4] {
    m.entries().map(|e| e.to_string())
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Serialize)]
pub struct IndexReport {
    pub q: String,
    pub p: u32,
    pub index: usize,
    pub base_index: usize,
    pub conjugate_index: usize,
    pub side_check: bool,
    pub representatives: Vec<[String; 4]>,
    pub words: Vec<String>,
}

pub fn word_string(w: &[Gen]) -> String {
    if w.is_empty() {
        return "I".into();
    }
    w.iter().map(|g| g.name()).collect::<Vec<_>>().join(" ")
}

impl IndexReport {
    pub fn new(q: String, p: u32, base: &CosetTable, conj: &CosetTable) -> Self {
        Self {
            q,
            p,
            index: base.index(),
            base_index: base.index(),
            conjugate_index: conj.index(),
            side_check: base.index() == conj.index(),
            representatives: base.representatives().iter().map(matrix_strings).collect(),
            words: base.words().iter().map(|w| word_string(w)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct MembershipReport {
    pub q: String,
    pub p: u32,
    pub matrix: [String; 4],
    pub in_g: bool,
    pub in_g_conj: bool,
    pub in_k: bool,
    /// Index of the coset `Kγ` in the enumerated table when `γ ∈ G`.
    pub coset: Option<usize>,
}

#[derive(Serialize)]
pub struct Profile {
    pub over_zero: Vec<usize>,
    pub over_one: Vec<usize>,
    pub over_infinity: Vec<usize>,
}

#[derive(Serialize)]
pub struct Permutations {
    pub sigma_0: Vec<usize>,
    pub sigma_1: Vec<usize>,
    pub sigma_inf: Vec<usize>,
}

#[derive(Serialize)]
pub struct Actions {
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    #[serde(rename = "V")]
    pub v: Vec<usize>,
    #[serde(rename = "T^-1")]
    pub t_inv: Vec<usize>,
    #[serde(rename = "V^-1")]
    pub v_inv: Vec<usize>,
}

#[derive(Serialize)]
pub struct SurfaceReport {
    pub q: String,
    pub p: u32,
    pub side: &'static str,
    pub degree: usize,
    pub genus: u32,
    pub punctures: usize,
    pub cone_points: Vec<u32>,
    pub ramification: Profile,
    pub permutations: Permutations,
    pub actions: Actions,
}

impl SurfaceReport {
    pub fn new(
        q: String,
        p: u32,
        side: &'static str,
        table: &CosetTable,
        triple: &PermutationTriple,
        inv: &SurfaceInvariants,
    ) -> Self {
        let prof = &inv.ramification_profile;
        Self {
            q,
            p,
            side,
            degree: inv.degree,
            genus: inv.genus,
            punctures: inv.punctures,
            cone_points: inv.cone_points.clone(),
            ramification: Profile {
                over_zero: prof.over_zero.clone(),
                over_one: prof.over_one.clone(),
                over_infinity: prof.over_infinity.clone(),
            },
            permutations: Permutations {
                sigma_0: triple.sigma_0.images().to_vec(),
                sigma_1: triple.sigma_1.images().to_vec(),
                sigma_inf: triple.sigma_inf.images().to_vec(),
            },
            actions: Actions {
                t: table.action(Gen::T).to_vec(),
                v: table.action(Gen::V).to_vec(),
                t_inv: table.action(Gen::TInv).to_vec(),
                v_inv: table.action(Gen::VInv).to_vec(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct DivisorReport {
    pub zero: String,
    pub one: String,
    pub infinity: String,
    pub multiplicities: [Vec<usize>; 3],
}

impl DivisorReport {
    pub fn new(d: &[Divisor; 3]) -> Self {
        Self {
            zero: d[0].to_string(),
            one: d[1].to_string(),
            infinity: d[2].to_string(),
            multiplicities: [d[0].multiplicities(), d[1].multiplicities(), d[2].multiplicities()],
        }
    }
}

#[derive(Serialize)]
pub struct PointReport {
    pub z: String,
    pub alpha: String,
    pub beta: String,
    pub alpha_f64: f64,
    pub beta_f64: f64,
    /// `[lhs, rhs]` of the radical identity when both sides are rational.
    pub radical_exact: Option<[String; 2]>,
    /// The two summands when the identity is a sum of two terms.
    pub radical_terms: Option<[String; 2]>,
}

#[derive(Serialize)]
pub struct ParamReport {
    pub case: String,
    pub phi: String,
    pub psi: String,
    pub omega: String,
    pub omega_derived: bool,
    pub omega_involution: bool,
    pub omega_reflection: bool,
    pub radical: String,
    pub phi_divisors: DivisorReport,
    pub psi_divisors: DivisorReport,
    pub point: Option<PointReport>,
}

#[derive(Serialize)]
pub struct SolveReport {
    pub a: f64,
    pub p: u32,
    pub alpha: f64,
    pub beta: f64,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Serialize)]
pub struct Structure {
    pub content: String,
    pub square_free_in_y: bool,
    pub leading_y_nonzero: bool,
    pub leading_x_nonzero: bool,
}

#[derive(Serialize)]
pub struct EliminateReport {
    pub case: String,
    pub degree_x: u32,
    pub degree_y: u32,
    /// `[i, j, "c"]` for each term `c·xⁱyʲ`.
    pub terms: Vec<(u32, u32, String)>,
    pub matches_published: bool,
    pub structure: Structure,
}

impl EliminateReport {
    pub fn new(case: String, p: &BivarPoly, published: &BivarPoly, s: &StructureReport) -> Self {
        Self {
            case,
            degree_x: p.degree_x().unwrap_or(0),
            degree_y: p.degree_y().unwrap_or(0),
            terms: p.terms().map(|(i, j, c)| (i, j, c.to_string())).collect(),
            matches_published: p == published,
            structure: Structure {
                content: s.content.to_string(),
                square_free_in_y: s.square_free_in_y,
                leading_y_nonzero: s.leading_y_nonzero,
                leading_x_nonzero: s.leading_x_nonzero,
            },
        }
    }
}

#[derive(Serialize)]
pub struct SideReport {
    pub name: String,
    pub word: String,
    pub from: [String; 2],
    pub to: [String; 2],
}

#[derive(Serialize)]
pub struct DomainReport {
    pub case: String,
    pub vertices: Vec<String>,
    pub pairings: Vec<SideReport>,
    pub closed: bool,
}

#[derive(Serialize)]
pub struct F21Report {
    pub a: f64,
    pub x: f64,
    pub value: f64,
    pub branch: &'static str,
    pub terms_used: usize,
}

#[derive(Serialize)]
pub struct MuReport {
    pub r: f64,
    pub mu: f64,
    pub ell_k: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(round_sig(0.015624999999999976, 15), 0.015625);
        assert_eq!(round_sig(1.23456, 3), 1.23);
        assert_eq!(round_sig(-123456.0, 2), -120000.0);
        assert_eq!(round_sig(0.0, 5), 0.0);
        assert!(round_sig(f64::NAN, 5).is_nan());
    }

    #[test]
    fn number_rendering() {
        assert_eq!(fmt_num(0.2187499999999997, 15), "0.21875");
        assert_eq!(fmt_num(2.2e-15, 3), "2.2e-15");
        assert_eq!(fmt_num(1.0, 15), "1");
    }
}
