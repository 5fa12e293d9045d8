//! Fundamental polygons of `K` for the four solved cases and their SVG
//! rendering in the upper half-plane.

use std::fmt::Write;

use modeq_core::arith::QuadRat;
use modeq_core::catalog::CaseId;
use modeq_core::group::{side_pairings, BoundaryPoint, GeneratorFixture};

#[derive(Clone, Debug)]
pub struct DomainPolygon {
    pub case: CaseId,
    /// Counterclockwise, finite vertices ascending, ending at `∞`.
    pub vertices: Vec<BoundaryPoint>,
    pub pairings: Vec<GeneratorFixture>,
}

/// A generator carrying side `from` onto side `to` (indices into
/// [`DomainPolygon::sides`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidePairing {
    pub name: String,
    pub word: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCheck {
    pub pairings: Vec<SidePairing>,
    /// Generators that carry no side onto another side.
    pub unmatched: Vec<String>,
    /// Every side occurs in exactly one pairing.
    pub covers_all_sides: bool,
}

impl PairingCheck {
    pub fn passed(&self) -> bool {
        self.unmatched.is_empty() && self.covers_all_sides
    }
}

fn vertex_list(items: &[&str]) -> Vec<BoundaryPoint> {
    items
        .iter()
        .map(|s| match *s {
            "inf" => BoundaryPoint::Infinity,
            v => BoundaryPoint::Finite(QuadRat::parse(v).expect("vertex literal")),
        })
        .collect()
}

impl DomainPolygon {
    pub fn new(case: CaseId) -> Self {
        let vertices = match case {
            CaseId::InfTwo => vertex_list(&["0", "1/2", "2/3", "1", "2", "inf"]),
            CaseId::InfThree => {
                vertex_list(&["0", "1/3", "2/5", "1/2", "2/3", "1", "4/3", "3/2", "2", "inf"])
            }
            CaseId::ThreeThree | CaseId::ThreeTwo => {
                vertex_list(&["0", "(1/3)√3", "(1/2)√3", "(2/3)√3", "√3", "inf"])
            }
        };
        let pairings = side_pairings(case.order(), case.p()).expect("catalog case");
        Self { case, vertices, pairings }
    }

    /// Sides `[v₀, v₁], …, [v_{k−1}, v₀]`; the last one closes through `∞`.
    pub fn sides(&self) -> Vec<(BoundaryPoint, BoundaryPoint)> {
        let k = self.vertices.len();
        (0..k).map(|i| (self.vertices[i].clone(), self.vertices[(i + 1) % k].clone())).collect()
    }

    pub fn check_pairings(&self) -> PairingCheck {
        let sides = self.sides();
        let mut pairings = Vec::new();
        let mut unmatched = Vec::new();
        for g in &self.pairings {
            let found = sides.iter().enumerate().find_map(|(i, (a, b))| {
                let (ga, gb) = (g.matrix.apply(a).ok()?, g.matrix.apply(b).ok()?);
                sides
                    .iter()
                    .position(|(c, d)| (ga == *c && gb == *d) || (ga == *d && gb == *c))
                    .filter(|&j| j != i)
                    .map(|j| (i, j))
            });
            match found {
                Some((from, to)) => pairings.push(SidePairing {
                    name: g.name.clone(),
                    word: g.word.to_string(),
                    from,
                    to,
                }),
                None => unmatched.push(g.name.clone()),
            }
        }
        let mut seen = vec![0usize; sides.len()];
        for p in &pairings {
            seen[p.from] += 1;
            seen[p.to] += 1;
        }
        PairingCheck { pairings, unmatched, covers_all_sides: seen.iter().all(|&n| n == 1) }
    }

    pub fn to_svg(&self) -> String {
        const WIDTH: f64 = 800.0;
        const MARGIN: f64 = 60.0;
        const AXIS_Y: f64 = 340.0;
        let finite: Vec<f64> = self
            .vertices
            .iter()
            .filter(|v| **v != BoundaryPoint::Infinity)
            .map(BoundaryPoint::to_f64)
            .collect();
        let lo = finite.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = finite.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let scale = (WIDTH - 2.0 * MARGIN) / (hi - lo);
        let sx = |x: f64| MARGIN + (x - lo) * scale;
        let top = 20.0;
        let check = self.check_pairings();
        let height = AXIS_Y + 44.0 + 14.0 * check.pairings.len() as f64;

        let mut path = String::new();
        let first = sx(finite[0]);
        write!(path, "M {first:.2} {top:.2} L {first:.2} {AXIS_Y:.2}").unwrap();
        for w in finite.windows(2) {
            let r = (w[1] - w[0]) * scale / 2.0;
            write!(path, " A {r:.2} {r:.2} 0 0 1 {:.2} {AXIS_Y:.2}", sx(w[1])).unwrap();
        }
        write!(path, " L {:.2} {top:.2} Z", sx(*finite.last().unwrap())).unwrap();

        let mut svg = String::new();
        writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}">"#
        )
        .unwrap();
        writeln!(svg, r#"<title>Fundamental domain for {}</title>"#, self.case).unwrap();
        writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{AXIS_Y:.2}" x2="{:.2}" y2="{AXIS_Y:.2}" stroke="black"/>"#,
            MARGIN / 2.0,
            WIDTH - MARGIN / 2.0
        )
        .unwrap();
        writeln!(svg, r##"<path d="{path}" fill="#dce8f5" stroke="#1f3b73" stroke-width="1.5"/>"##).unwrap();
        for v in &self.vertices {
            if let BoundaryPoint::Finite(q) = v {
                let x = sx(q.to_f64());
                writeln!(svg, r#"<circle cx="{x:.2}" cy="{AXIS_Y:.2}" r="2.5"/>"#).unwrap();
                writeln!(
                    svg,
                    r#"<text x="{x:.2}" y="{:.2}" font-size="11" text-anchor="middle">{}</text>"#,
                    AXIS_Y + 18.0,
                    escape(&q.to_string())
                )
                .unwrap();
            }
        }
        writeln!(svg, r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">∞</text>"#, WIDTH / 2.0, top + 4.0).unwrap();

        let sides = self.sides();
        let label_at = |i: usize| -> (f64, f64) {
            match &sides[i] {
                (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                    let (a, b) = (a.to_f64(), b.to_f64());
                    ((sx(a) + sx(b)) / 2.0, AXIS_Y - (b - a).abs() * scale / 2.0 - 6.0)
                }
                (BoundaryPoint::Finite(a), BoundaryPoint::Infinity)
                | (BoundaryPoint::Infinity, BoundaryPoint::Finite(a)) => {
                    let x = sx(a.to_f64());
                    let dx = if (x - sx(lo)).abs() < 1e-9 { -8.0 } else { 8.0 };
                    (x + dx, (top + AXIS_Y) / 2.0)
                }
                _ => (WIDTH / 2.0, top),
            }
        };
        for p in &check.pairings {
            for (i, suffix) in [(p.from, ""), (p.to, "′")] {
                let (x, y) = label_at(i);
                writeln!(
                    svg,
                    r##"<text x="{x:.2}" y="{y:.2}" font-size="11" fill="#8a1c1c" text-anchor="middle">{}{suffix}</text>"##,
                    escape(&p.name)
                )
                .unwrap();
            }
        }
        for (k, p) in check.pairings.iter().enumerate() {
            let (a, b) = &sides[p.from];
            let (c, d) = &sides[p.to];
            writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}" font-size="11">{} = {}: [{}, {}] → [{}, {}]</text>"#,
                MARGIN / 2.0,
                AXIS_Y + 44.0 + 14.0 * k as f64,
                escape(&p.name),
                escape(&p.word),
                escape(&a.to_string()),
                escape(&b.to_string()),
                escape(&c.to_string()),
                escape(&d.to_string())
            )
            .unwrap();
        }
        svg.push_str("</svg>\n");
        svg
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
