//! Invariants of the covering `Z = K\ℍ → X = G_q\ℍ` read off from the
//! permutation action of `G_q` on the cosets of `K`.
//!
//! The three special points of `X` are labelled by their image under the
//! covering map: `x = 0` is the cusp `∞` (stabilizer `T`), `x = 1` the cusp
//! `0` (stabilizer `W = V⁻¹T`) and `x = ∞` the fixed class of `V`, a cusp
//! for `q = ∞` and an elliptic point of order `q` otherwise.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::group::{CosetTable, Gen, GroupContext, Order};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("coset table is incomplete: {0}")]
    IncompleteTable(&'static str),
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("permutation triple is not transitive")]
    NotTransitive,
    #[error("Riemann-Hurwitz gives a non-integral or negative genus (2 - 2g = {0})")]
    InconsistentRiemannHurwitz(i64),
    #[error("elliptic cycle of length {length} does not divide the order {order}")]
    EllipticCycle { length: usize, order: u32 },
}

/// A bijection of `{0, …, n−1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, TopologyError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(TopologyError::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`, matching right
    /// actions where `K r g h` is reached by applying `g` first.
    pub fn then(&self, other: &Self) -> Self {
        Self(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in ascending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            f.write_str("(")?;
            for (k, i) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Monodromy of the covering over `x = 0, 1, ∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationTriple {
    pub sigma_0: Permutation,
    pub sigma_1: Permutation,
    pub sigma_inf: Permutation,
}

impl PermutationTriple {
    pub fn degree(&self) -> usize {
        self.sigma_0.len()
    }

    pub fn as_array(&self) -> [&Permutation; 3] {
        [&self.sigma_0, &self.sigma_1, &self.sigma_inf]
    }

    /// The generated group acts transitively, i.e. `Z` is connected.
    pub fn is_transitive(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for s in self.as_array() {
                let j = s.apply(i);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Coset actions of `T`, `W = V⁻¹T` and `V` on the given table.
pub fn monodromy(table: &CosetTable) -> Result<PermutationTriple, TopologyError> {
    let n = table.index();
    let perm = |g: Gen| -> Result<Permutation, TopologyError> {
        let a = table.action(g);
        if a.len() != n {
            return Err(TopologyError::IncompleteTable("action length differs from index"));
        }
        Permutation::new(a.to_vec())
    };
    let t = perm(Gen::T)?;
    let v = perm(Gen::V)?;
    let v_inv = perm(Gen::VInv)?;
    if v.then(&v_inv) != Permutation::identity(n) {
        return Err(TopologyError::IncompleteTable("V and V^-1 actions are not inverse"));
    }
    Ok(PermutationTriple { sigma_0: t.clone(), sigma_1: v_inv.then(&t), sigma_inf: v })
}

/// Cycle lengths over `x = 0, 1, ∞`, each sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    pub over_zero: Vec<usize>,
    pub over_one: Vec<usize>,
    pub over_infinity: Vec<usize>,
}

impl RamificationProfile {
    pub fn as_array(&self) -> [&[usize]; 3] {
        [&self.over_zero, &self.over_one, &self.over_infinity]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub degree: usize,
    pub genus: u32,
    pub punctures: usize,
    pub cone_points: Vec<u32>,
    pub ramification_profile: RamificationProfile,
}

/// Genus by Riemann–Hurwitz, punctures from the cusp classes, cone points
/// of order `q/e` from elliptic cycles of length `e < q`.
pub fn surface_invariants(
    triple: &PermutationTriple,
    ctx: &GroupContext,
) -> Result<SurfaceInvariants, TopologyError> {
    if !triple.is_transitive() {
        return Err(TopologyError::NotTransitive);
    }
    let n = triple.degree();
    let profile = RamificationProfile {
        over_zero: triple.sigma_0.cycle_type(),
        over_one: triple.sigma_1.cycle_type(),
        over_infinity: triple.sigma_inf.cycle_type(),
    };
    let branching: usize = profile.as_array().iter().flat_map(|p| p.iter()).map(|&e| e - 1).sum();
    let euler = 2 * n as i64 - branching as i64;
    if euler > 2 || euler % 2 != 0 {
        return Err(TopologyError::InconsistentRiemannHurwitz(euler));
    }
    let genus = ((2 - euler) / 2) as u32;

    let cusp_cycles = profile.over_zero.len() + profile.over_one.len();
    let (punctures, cone_points) = match ctx.order() {
        Order::Infinity => (cusp_cycles + profile.over_infinity.len(), Vec::new()),
        Order::Finite(q) => {
            let mut cones = Vec::new();
            for &e in &profile.over_infinity {
                if !(q as usize).is_multiple_of(e) {
                    return Err(TopologyError::EllipticCycle { length: e, order: q });
                }
                if e < q as usize {
                    cones.push(q / e as u32);
                }
            }
            (cusp_cycles, cones)
        }
    };
    Ok(SurfaceInvariants { degree: n, genus, punctures, cone_points, ramification_profile: profile })
}
