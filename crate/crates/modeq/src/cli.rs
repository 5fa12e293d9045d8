//! Argument parsing and dispatch. [`run`] never exits the process; it
//! returns the exit code.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use modeq_core::arith::rational::{parse_rational, to_f64};
use modeq_core::arith::{BigRat, QuadRat};
use modeq_core::catalog::{case, check_omega, ramification, CaseId};
use modeq_core::elim::{eliminate, square_free_and_degree_report, BivarPoly, ElimInput};
use modeq_core::group::{enumerate_cosets, CosetLimits, GroupContext, GroupError, MoebiusMat, Order, Side, Word};
use modeq_core::hgf::{ell_k, f21, mu, Branch, HgfParams, NumericError};
use modeq_core::solver::{solve_beta, SolveError, SolveRequest};
use modeq_core::topology::{monodromy, surface_invariants};

use crate::domain::DomainPolygon;
use crate::report::*;
use crate::verify::{verify_all, CaseFixtures};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "modeq", version, about = "Workbench for generalized modular equations of signature q")]
pub struct Cli {
    /// Significant digits of floating-point output.
    #[arg(long, global = true, env = "MODEQ_PRECISION", default_value_t = 15,
          value_parser = clap::value_parser!(u32).range(1..=17))]
    pub precision: u32,
    /// Upper bound on the number of cosets enumerated.
    #[arg(long, global = true, env = "MODEQ_MAX_COSETS", default_value_t = 4096)]
    pub max_cosets: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Base,
    Conjugate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Human,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Index of K = G ∩ G^{M_p} in G and in G^{M_p}.
    Index {
        #[arg(long)]
        q: Order,
        #[arg(long)]
        p: u32,
    },
    /// Membership of a matrix or word in G, G^{M_p} and K.
    Membership {
        #[arg(long)]
        q: Order,
        #[arg(long)]
        p: u32,
        /// Entries `a,b,c,d`, e.g. `-2,sqrt3,-3sqrt3,4`.
        #[arg(long, required_unless_present = "word", conflicts_with = "word", allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Word in T, V, S, W, e.g. `V^-1 T V`.
        #[arg(long)]
        word: Option<String>,
    },
    /// Monodromy, genus, punctures and cone points of the covering.
    Surface {
        #[arg(long)]
        q: Order,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "base")]
        side: SideArg,
    },
    /// Parametrization of a catalog case, optionally evaluated at z.
    Param {
        #[arg(long)]
        case: CaseId,
        /// Rational parameter value, e.g. `1/2`.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Solve m_a(beta) = p m_a(alpha) for beta in (0, 1).
    Solve {
        /// `a` as a rational or decimal, e.g. `1/3`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        p: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Modular polynomial P(x, y) of a catalog case.
    Eliminate {
        #[arg(long)]
        case: CaseId,
        #[arg(long, value_enum, default_value = "human")]
        format: PolyFormat,
    },
    /// Run every check on every catalog case.
    Verify {
        #[arg(long, default_value_t = 97, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
    },
    /// SVG of the fundamental polygon of a catalog case.
    DomainSvg {
        #[arg(long)]
        case: CaseId,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// F_a(x) = 2F1(a, 1-a; 1; x).
    F21 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Grötzsch modulus mu(r) and K(r).
    Mu {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Cap(_) => "cap_exceeded",
            CliError::Failure(_) => "failure",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Cap(m) | CliError::Failure(m) => m,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded(_) | GroupError::WordCapExceeded(_) => CliError::Cap(e.to_string()),
            GroupError::UnsupportedOrder(_)
            | GroupError::ParseOrder(_)
            | GroupError::InvalidDegree(_)
            | GroupError::NotUnimodular(_)
            | GroupError::ParseWord(_)
            | GroupError::Arith(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<NumericError> for CliError {
    fn from(e: NumericError) -> Self {
        match e {
            NumericError::OutOfRange(_) => CliError::Usage(e.to_string()),
            NumericError::NonConvergence(_) => CliError::Failure(e.to_string()),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Numeric(n) => n.into(),
            SolveError::NotBracketed(_) | SolveError::InvalidRequest(_) => CliError::Usage(e.to_string()),
            SolveError::NonConvergence(_) => CliError::Failure(e.to_string()),
        }
    }
}

fn usage(e: impl Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn io_failure(e: std::io::Error) -> CliError {
    CliError::Failure(e.to_string())
}

/// A rational (`49/54`) or a decimal (`0.9`).
fn parse_number(s: &str) -> Result<f64, CliError> {
    if let Ok(r) = parse_rational(s.trim()) {
        return Ok(to_f64(&r));
    }
    s.trim().parse::<f64>().map_err(|_| usage(format!("cannot parse number `{s}`")))
}

fn parse_matrix(s: &str) -> Result<MoebiusMat, CliError> {
    let parts: Vec<&str> = s.split([',', ';']).map(str::trim).collect();
    let [a, b, c, d] = parts.as_slice() else {
        return Err(usage(format!("expected four entries `a,b,c,d`, got `{s}`")));
    };
    let q = |t: &str| QuadRat::parse(t).map_err(usage);
    Ok(MoebiusMat::new(q(a)?, q(b)?, q(c)?, q(d)?)?)
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn num(&self, x: f64) -> String {
        fmt_num(x, self.cli.precision)
    }

    fn round(&self, x: f64) -> f64 {
        round_sig(x, self.cli.precision)
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        let s = serde_json::to_string_pretty(value).map_err(|e| CliError::Failure(e.to_string()))?;
        writeln!(self.out, "{s}").map_err(io_failure)
    }

    fn line(&mut self, s: impl Display) -> Result<(), CliError> {
        writeln!(self.out, "{s}").map_err(io_failure)
    }

    fn limits(&self) -> CosetLimits {
        CosetLimits { max_cosets: self.cli.max_cosets, ..CosetLimits::default() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let target: &mut dyn Write = if informational { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let json = cli.json;
    let mut ctx = Ctx { cli: &cli, out };
    match dispatch(&mut ctx) {
        Ok(code) => code,
        Err(e) => {
            if json {
                let body = ErrorReport { error: ErrorBody { kind: e.kind(), message: e.message().to_string() } };
                let _ = ctx.json(&body);
            } else {
                let _ = writeln!(err, "error: {}", e.message());
            }
            e.code()
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>) -> Result<i32, CliError> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Index { q, p } => cmd_index(ctx, *q, *p),
        Command::Membership { q, p, matrix, word } => cmd_membership(ctx, *q, *p, matrix.as_deref(), word.as_deref()),
        Command::Surface { q, p, side } => cmd_surface(ctx, *q, *p, *side),
        Command::Param { case, z } => cmd_param(ctx, *case, z.as_deref()),
        Command::Solve { a, p, alpha, tol } => cmd_solve(ctx, a, *p, alpha, *tol),
        Command::Eliminate { case, format } => {
            let format = if cli.json { PolyFormat::Json } else { *format };
            cmd_eliminate(ctx, *case, format)
        }
        Command::Verify { samples } => cmd_verify(ctx, *samples as usize),
        Command::DomainSvg { case, output } => cmd_domain_svg(ctx, *case, output.as_ref()),
        Command::F21 { a, x } => cmd_f21(ctx, a, x),
        Command::Mu { r } => cmd_mu(ctx, r),
    }
}

fn cmd_index(ctx: &mut Ctx<'_>, q: Order, p: u32) -> Result<i32, CliError> {
    let g = GroupContext::new(q, p)?;
    let base = enumerate_cosets(&g, Side::Base, ctx.limits())?;
    let conj = enumerate_cosets(&g, Side::Conjugate, ctx.limits())?;
    let report = IndexReport::new(q.to_string(), p, &base, &conj);
    if ctx.cli.json {
        ctx.json(&report)?;
    } else {
        ctx.line(format_args!("index {} (q={q}, p={p})", report.index))?;
        ctx.line(format_args!(
            "conjugate side {}: {}",
            report.conjugate_index,
            if report.side_check { "equal" } else { "DIFFERENT" }
        ))?;
        for (w, m) in report.words.iter().zip(base.representatives()) {
            ctx.line(format_args!("  {w:<16} {m}"))?;
        }
    }
    Ok(if report.side_check { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_membership(
    ctx: &mut Ctx<'_>,
    q: Order,
    p: u32,
    matrix: Option<&str>,
    word: Option<&str>,
) -> Result<i32, CliError> {
    let g = GroupContext::new(q, p)?;
    let m = match (matrix, word) {
        (Some(s), _) => parse_matrix(s)?,
        (None, Some(w)) => w.parse::<Word>()?.eval(&g),
        (None, None) => return Err(usage("one of --matrix or --word is required")),
    };
    let in_g = g.in_g(&m);
    let coset = if in_g {
        enumerate_cosets(&g, Side::Base, ctx.limits())?.locate(&g, &m)
    } else {
        None
    };
    let report = MembershipReport {
        q: q.to_string(),
        p,
        matrix: matrix_strings(&m),
        in_g,
        in_g_conj: g.in_g_conj(&m),
        in_k: g.in_k(&m),
        coset,
    };
    if ctx.cli.json {
        ctx.json(&report)?;
    } else {
        ctx.line(format_args!("matrix {m}"))?;
        ctx.line(format_args!("in G: {}", report.in_g))?;
        ctx.line(format_args!("in G^M_p: {}", report.in_g_conj))?;
        ctx.line(format_args!("in K: {}", report.in_k))?;
        if let Some(c) = coset {
            ctx.line(format_args!("coset: {c}"))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_surface(ctx: &mut Ctx<'_>, q: Order, p: u32, side: SideArg) -> Result<i32, CliError> {
    let g = GroupContext::new(q, p)?;
    let (side, label) = match side {
        SideArg::Base => (Side::Base, "base"),
        SideArg::Conjugate => (Side::Conjugate, "conjugate"),
    };
    let table = enumerate_cosets(&g, side, ctx.limits())?;
    let triple = monodromy(&table).map_err(|e| CliError::Failure(e.to_string()))?;
    let inv = surface_invariants(&triple, &g).map_err(|e| CliError::Failure(e.to_string()))?;
    if ctx.cli.json {
        ctx.json(&SurfaceReport::new(q.to_string(), p, label, &table, &triple, &inv))?;
    } else {
        ctx.line(format_args!("degree {}", inv.degree))?;
        ctx.line(format_args!("genus {}", inv.genus))?;
        ctx.line(format_args!("punctures {}", inv.punctures))?;
        ctx.line(format_args!("cone points {:?}", inv.cone_points))?;
        ctx.line(format_args!("sigma_0   {}", triple.sigma_0))?;
        ctx.line(format_args!("sigma_1   {}", triple.sigma_1))?;
        ctx.line(format_args!("sigma_inf {}", triple.sigma_inf))?;
        let r = &inv.ramification_profile;
        ctx.line(format_args!("over 0: {:?}, over 1: {:?}, over inf: {:?}", r.over_zero, r.over_one, r.over_infinity))?;
    }
    Ok(EXIT_OK)
}

fn cmd_param(ctx: &mut Ctx<'_>, id: CaseId, z: Option<&str>) -> Result<i32, CliError> {
    let c = case(id);
    let omega = check_omega(&c);
    let point = match z {
        None => None,
        Some(s) => {
            let z: BigRat = parse_rational(s.trim()).map_err(usage)?;
            let a = c.phi.eval_rat(&z).map_err(usage)?;
            let b = c.psi.eval_rat(&z).map_err(usage)?;
            let exact = c.radical.exact(&a, &b);
            let radical_exact = exact.as_ref().map(|e| [e.lhs.to_string(), e.rhs.to_string()]);
            let radical_terms = exact.and_then(|e| e.terms).map(|(s, t)| [s.to_string(), t.to_string()]);
            Some(PointReport {
                z: z.to_string(),
                alpha_f64: ctx.round(to_f64(&a)),
                beta_f64: ctx.round(to_f64(&b)),
                alpha: a.to_string(),
                beta: b.to_string(),
                radical_exact,
                radical_terms,
            })
        }
    };
    let report = ParamReport {
        case: id.to_string(),
        phi: c.phi.to_string(),
        psi: c.psi.to_string(),
        omega: c.omega.to_string(),
        omega_derived: c.omega_derived,
        omega_involution: omega.involution,
        omega_reflection: omega.reflection,
        radical: c.radical.to_string(),
        phi_divisors: DivisorReport::new(&ramification(&c.phi)),
        psi_divisors: DivisorReport::new(&ramification(&c.psi)),
        point,
    };
    if ctx.cli.json {
        ctx.json(&report)?;
    } else {
        ctx.line(format_args!("case  {}", report.case))?;
        ctx.line(format_args!("phi   {}", report.phi))?;
        ctx.line(format_args!("psi   {}", report.psi))?;
        ctx.line(format_args!(
            "omega {}{}",
            report.omega,
            if report.omega_derived { " (derived)" } else { "" }
        ))?;
        ctx.line(format_args!("omega∘omega = id: {}, psi = 1 - phi∘omega: {}", omega.involution, omega.reflection))?;
        let d = &report.phi_divisors;
        ctx.line(format_args!("(phi)_0 = {}, (phi)_1 = {}, (phi)_inf = {}", d.zero, d.one, d.infinity))?;
        ctx.line(format_args!("radical identity: {}", report.radical))?;
        if let Some(pt) = &report.point {
            ctx.line(format_args!("z = {}: alpha = {}, beta = {}", pt.z, pt.alpha, pt.beta))?;
            match (&pt.radical_terms, &pt.radical_exact) {
                (Some([s, t]), Some([l, r])) => ctx.line(format_args!("radical identity: {s} + {t} = {l} = {r}"))?,
                (None, Some([l, r])) => ctx.line(format_args!("radical identity: {l} = {r}"))?,
                _ => {}
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_solve(ctx: &mut Ctx<'_>, a: &str, p: u32, alpha: &str, tol: Option<f64>) -> Result<i32, CliError> {
    let mut req = SolveRequest::new(parse_number(a)?, p, parse_number(alpha)?);
    if let Some(t) = tol {
        req.tol = t;
    }
    let s = solve_beta(&req)?;
    if ctx.cli.json {
        let r = SolveReport {
            a: ctx.round(req.a),
            p,
            alpha: ctx.round(req.alpha),
            beta: ctx.round(s.beta),
            residual: ctx.round(s.residual),
            iterations: s.iterations,
        };
        ctx.json(&r)?;
    } else {
        ctx.line(format_args!("beta {}", ctx.num(s.beta)))?;
        ctx.line(format_args!("residual {}", ctx.num(s.residual)))?;
        ctx.line(format_args!("iterations {}", s.iterations))?;
    }
    Ok(EXIT_OK)
}

fn cmd_eliminate(ctx: &mut Ctx<'_>, id: CaseId, format: PolyFormat) -> Result<i32, CliError> {
    let c = case(id);
    let input = ElimInput { phi: c.phi.clone(), psi: c.psi.clone(), expected_degree: c.expected_index };
    let p = eliminate(&input).map_err(|e| CliError::Failure(e.to_string()))?;
    let published = BivarPoly::from_terms(&c.published_polynomial);
    let structure = square_free_and_degree_report(&p);
    match format {
        PolyFormat::Json => ctx.json(&EliminateReport::new(id.to_string(), &p, &published, &structure))?,
        PolyFormat::Latex => ctx.line(p.to_latex())?,
        PolyFormat::Human => {
            ctx.line(format_args!("P(x,y) = {p}"))?;
            ctx.line(format_args!(
                "bidegree ({}, {}), content {}, square-free in y: {}",
                structure.deg_x, structure.deg_y, structure.content, structure.square_free_in_y
            ))?;
            if p == published {
                ctx.line("matches the published polynomial")?;
            } else {
                ctx.line(format_args!("differs from the published polynomial {published}"))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(ctx: &mut Ctx<'_>, samples: usize) -> Result<i32, CliError> {
    let report = verify_all(samples, &CaseFixtures::all());
    if ctx.cli.json {
        ctx.json(&report)?;
    } else {
        for case in &report.cases {
            for c in &case.checks {
                ctx.line(format_args!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))?;
            }
        }
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        if failed.is_empty() {
            ctx.line(format_args!("all {} checks passed", report.check_count()))?;
        } else {
            ctx.line(format_args!(
                "{} of {} checks failed: {}",
                failed.len(),
                report.check_count(),
                failed.join("; ")
            ))?;
        }
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_domain_svg(ctx: &mut Ctx<'_>, id: CaseId, output: Option<&PathBuf>) -> Result<i32, CliError> {
    let poly = DomainPolygon::new(id);
    let check = poly.check_pairings();
    if ctx.cli.json {
        let sides = poly.sides();
        let pair = |i: usize| [sides[i].0.to_string(), sides[i].1.to_string()];
        let report = DomainReport {
            case: id.to_string(),
            vertices: poly.vertices.iter().map(ToString::to_string).collect(),
            pairings: check
                .pairings
                .iter()
                .map(|p| SideReport { name: p.name.clone(), word: p.word.clone(), from: pair(p.from), to: pair(p.to) })
                .collect(),
            closed: check.passed(),
        };
        ctx.json(&report)?;
    } else {
        let svg = poly.to_svg();
        match output {
            Some(path) => std::fs::write(path, svg).map_err(io_failure)?,
            None => write!(ctx.out, "{svg}").map_err(io_failure)?,
        }
    }
    Ok(if check.passed() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_f21(ctx: &mut Ctx<'_>, a: &str, x: &str) -> Result<i32, CliError> {
    let params = HgfParams::new(parse_number(a)?);
    let x = parse_number(x)?;
    let r = f21(&params, x)?;
    let branch = match r.branch {
        Branch::DirectSeries => "direct-series",
        Branch::LogConnection => "log-connection",
    };
    if ctx.cli.json {
        let rep = F21Report { a: params.a, x, value: ctx.round(r.value), branch, terms_used: r.terms_used };
        ctx.json(&rep)?;
    } else {
        ctx.line(format_args!("F_a(x) = {}", ctx.num(r.value)))?;
        ctx.line(format_args!("branch {branch}, {} terms", r.terms_used))?;
    }
    Ok(EXIT_OK)
}

fn cmd_mu(ctx: &mut Ctx<'_>, r: &str) -> Result<i32, CliError> {
    let r = parse_number(r)?;
    let (m, k) = (mu(r)?, ell_k(r)?);
    if ctx.cli.json {
        let rep = MuReport { r, mu: ctx.round(m), ell_k: ctx.round(k) };
        ctx.json(&rep)?;
    } else {
        ctx.line(format_args!("mu(r) = {}", ctx.num(m)))?;
        ctx.line(format_args!("K(r) = {}", ctx.num(k)))?;
    }
    Ok(EXIT_OK)
}
