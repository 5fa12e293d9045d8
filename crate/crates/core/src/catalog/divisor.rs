//! Fibres of a rational map over a point `w`, as divisors `Σ mᵢ·zᵢ` on the
//! `z`-sphere.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::arith::{BigRat, IntPoly};

use super::RationalMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorPoint {
    Rational(BigRat),
    Infinity,
    /// Every root of an irreducible-over-ℚ factor of degree ≥ 2, each with
    /// the same multiplicity.
    RootsOf(IntPoly),
}

impl DivisorPoint {
    /// Number of points of the sphere this entry stands for.
    pub fn count(&self) -> usize {
        match self {
            DivisorPoint::RootsOf(p) => p.degree().unwrap_or(0),
            _ => 1,
        }
    }
}

impl fmt::Display for DivisorPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorPoint::Rational(r) => write!(f, "{r}"),
            DivisorPoint::Infinity => f.write_str("∞"),
            DivisorPoint::RootsOf(p) => write!(f, "roots({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Divisor {
    pub entries: Vec<(DivisorPoint, usize)>,
}

impl Divisor {
    /// Multiplicities of all points, expanded over `RootsOf` entries and
    /// sorted ascending.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.entries.iter().flat_map(|(pt, m)| vec![*m; pt.count()]).collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self) -> usize {
        self.multiplicities().iter().sum()
    }

    pub fn multiplicity_at(&self, pt: &DivisorPoint) -> Option<usize> {
        self.entries.iter().find(|(p, _)| p == pt).map(|(_, m)| *m)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (pt, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}·{pt}")?;
        }
        Ok(())
    }
}

/// Target of a fibre: a finite rational value or `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibreValue {
    Finite(BigRat),
    Infinity,
}

/// `(f)_w`: preimages of `w` under `f` with multiplicities, including the
/// point `z = ∞` when `f(∞) = w`.
pub fn fibre(f: &RationalMap, w: &FibreValue) -> Divisor {
    let n = f.degree();
    let (_, dd) = f.degrees();
    let (poly, finite_degree) = match w {
        FibreValue::Infinity => (f.denominator().clone(), dd),
        FibreValue::Finite(w) => {
            let p = f.fiber_polynomial(w);
            let d = p.degree().unwrap_or(0);
            (p, d)
        }
    };
    let mut entries = Vec::new();
    for (factor, mult) in poly.square_free_factors() {
        let mut rest = factor;
        for r in rest.rational_roots() {
            let linear = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
            rest = rest.div_exact(&linear).expect("rational root divides");
            entries.push((DivisorPoint::Rational(r), mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            entries.push((DivisorPoint::RootsOf(rest.primitive()), mult));
        }
    }
    entries.sort_by_key(|(a, _)| order_key(a));
    if finite_degree < n {
        entries.push((DivisorPoint::Infinity, n - finite_degree));
    }
    Divisor { entries }
}

fn order_key(p: &DivisorPoint) -> (u8, BigRat) {
    match p {
        DivisorPoint::Rational(r) => (0, r.clone()),
        DivisorPoint::RootsOf(q) => (1, BigRat::from_integer(BigInt::from(q.degree().unwrap_or(0)))),
        DivisorPoint::Infinity => (2, BigRat::default()),
    }
}

/// `(f)_0`, `(f)_1` and `(f)_∞`.
pub fn ramification(f: &RationalMap) -> [Divisor; 3] {
    [
        fibre(f, &FibreValue::Finite(BigRat::from_integer(0.into()))),
        fibre(f, &FibreValue::Finite(BigRat::from_integer(1.into()))),
        fibre(f, &FibreValue::Infinity),
    ]
}
