//! Breadth-first enumeration of the right cosets `Kγ` of
//! `K = G_q ∩ G_q^{M_p}` inside `G_q` (or inside `G_q^{M_p}`).
//!
//! Two elements lie in the same coset iff `γ₂γ₁⁻¹ ∈ K`, which is decided
//! exactly by the membership criteria of [`GroupContext`]. The coset
//! count is small for every supported case, so identification is a linear
//! scan over the representatives found so far.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{GroupContext, GroupError, MoebiusMat, Side};

/// One of the four generators acting on cosets by right multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    T,
    V,
    TInv,
    VInv,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::T, Gen::V, Gen::TInv, Gen::VInv];

    pub fn index(self) -> usize {
        match self {
            Gen::T => 0,
            Gen::V => 1,
            Gen::TInv => 2,
            Gen::VInv => 3,
        }
    }

    pub fn inverse(self) -> Gen {
        match self {
            Gen::T => Gen::TInv,
            Gen::V => Gen::VInv,
            Gen::TInv => Gen::T,
            Gen::VInv => Gen::V,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::T => "T",
            Gen::V => "V",
            Gen::TInv => "T^-1",
            Gen::VInv => "V^-1",
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetLimits {
    pub max_cosets: usize,
    pub max_word_len: usize,
}

impl Default for CosetLimits {
    fn default() -> Self {
        Self { max_cosets: 4096, max_word_len: 64 }
    }
}

/// Complete coset table: representatives (index 0 is the identity), the
/// generator word reaching each one, and the permutation action of each
/// generator.
#[derive(Clone, Debug)]
pub struct CosetTable {
    side: Side,
    reps: Vec<MoebiusMat>,
    words: Vec<Vec<Gen>>,
    action: [Vec<usize>; 4],
}

impl CosetTable {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[MoebiusMat] {
        &self.reps
    }

    pub fn words(&self) -> &[Vec<Gen>] {
        &self.words
    }

    /// `action(g)[i] = j` iff `K r_i g = K r_j`.
    pub fn action(&self, g: Gen) -> &[usize] {
        &self.action[g.index()]
    }

    /// Coset index of `γ`, if it belongs to the enumerated group.
    pub fn locate(&self, ctx: &GroupContext, gamma: &MoebiusMat) -> Option<usize> {
        self.reps.iter().position(|r| ctx.in_k(&(gamma * &r.inverse())))
    }
}

pub fn enumerate_cosets(
    ctx: &GroupContext,
    side: Side,
    limits: CosetLimits,
) -> Result<CosetTable, GroupError> {
    if limits.max_cosets == 0 {
        return Err(GroupError::CapExceeded(0));
    }
    let gens = ctx.generators(side);
    let mut reps = vec![MoebiusMat::identity()];
    let mut inverses = vec![MoebiusMat::identity()];
    let mut words: Vec<Vec<Gen>> = vec![Vec::new()];
    let mut action: [Vec<Option<usize>>; 4] = Default::default();

    let mut next = 0;
    while next < reps.len() {
        for g in Gen::ALL {
            let cand = &reps[next] * &gens[g.index()];
            let found = inverses.iter().position(|inv| ctx.in_k(&(&cand * inv)));
            let target = match found {
                Some(j) => j,
                None => {
                    if reps.len() >= limits.max_cosets {
                        return Err(GroupError::CapExceeded(limits.max_cosets));
                    }
                    let mut word = words[next].clone();
                    word.push(g);
                    if word.len() > limits.max_word_len {
                        return Err(GroupError::WordCapExceeded(limits.max_word_len));
                    }
                    inverses.push(cand.inverse());
                    reps.push(cand);
                    words.push(word);
                    reps.len() - 1
                }
            };
            let slot = &mut action[g.index()];
            if slot.len() <= next {
                slot.resize(next + 1, None);
            }
            slot[next] = Some(target);
        }
        next += 1;
    }

    let action = action.map(|a| a.into_iter().map(|x| x.expect("every coset was processed")).collect());
    Ok(CosetTable { side, reps, words, action })
}

/// Conjugates `r Vᵏ r⁻¹` (`0 < k < q`) of the elliptic generator that fall
/// into `K`; empty exactly when `K` contains no elliptic element. Always
/// empty for `q = ∞`, where `V` is parabolic.
pub fn elliptic_elements_in_k(ctx: &GroupContext, table: &CosetTable) -> Vec<MoebiusMat> {
    let super::Order::Finite(q) = ctx.order() else {
        return Vec::new();
    };
    let v = match table.side() {
        Side::Base => ctx.v().clone(),
        Side::Conjugate => ctx.conjugate(ctx.v()),
    };
    let mut found = Vec::new();
    for r in table.representatives() {
        for k in 1..q as i32 {
            let e = &(r * &v.pow(k)) * &r.inverse();
            if ctx.in_k(&e) && !e.is_identity() {
                found.push(e);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Order;

    fn table(order: Order, p: u32, side: Side) -> CosetTable {
        let ctx = GroupContext::new(order, p).unwrap();
        enumerate_cosets(&ctx, side, CosetLimits::default()).unwrap()
    }

    #[test]
    fn solved_case_indices() {
        assert_eq!(table(Order::Infinity, 2, Side::Base).index(), 2);
        assert_eq!(table(Order::Infinity, 3, Side::Base).index(), 4);
        assert_eq!(table(Order::Finite(3), 2, Side::Base).index(), 3);
        assert_eq!(table(Order::Finite(3), 3, Side::Base).index(), 3);
    }

    #[test]
    fn both_sides_agree() {
        for (o, p) in [(Order::Infinity, 2), (Order::Infinity, 3), (Order::Finite(3), 2), (Order::Finite(3), 3), (Order::Finite(3), 5)] {
            assert_eq!(table(o, p, Side::Base).index(), table(o, p, Side::Conjugate).index(), "q={o} p={p}");
        }
    }

    #[test]
    fn actions_are_inverse_bijections() {
        let t = table(Order::Infinity, 3, Side::Base);
        let n = t.index();
        for g in Gen::ALL {
            let a = t.action(g);
            let b = t.action(g.inverse());
            let mut seen = vec![false; n];
            for i in 0..n {
                assert_eq!(b[a[i]], i);
                seen[a[i]] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn representatives_are_inequivalent_members() {
        let ctx = GroupContext::new(Order::Finite(3), 2).unwrap();
        let t = enumerate_cosets(&ctx, Side::Base, CosetLimits::default()).unwrap();
        for (i, r) in t.representatives().iter().enumerate() {
            assert!(ctx.in_g(r));
            assert_eq!(t.locate(&ctx, r), Some(i));
        }
        let ct = enumerate_cosets(&ctx, Side::Conjugate, CosetLimits::default()).unwrap();
        assert!(ct.representatives().iter().all(|r| ctx.in_g_conj(r)));
    }

    #[test]
    fn caps_are_reported() {
        let ctx = GroupContext::new(Order::Finite(3), 7).unwrap();
        let small = CosetLimits { max_cosets: 2, max_word_len: 64 };
        assert_eq!(enumerate_cosets(&ctx, Side::Base, small).unwrap_err(), GroupError::CapExceeded(2));
        let short = CosetLimits { max_cosets: 4096, max_word_len: 0 };
        assert_eq!(enumerate_cosets(&ctx, Side::Base, short).unwrap_err(), GroupError::WordCapExceeded(0));
    }

    #[test]
    fn torsion_free_for_order_three() {
        for p in [2, 3] {
            let ctx = GroupContext::new(Order::Finite(3), p).unwrap();
            let t = enumerate_cosets(&ctx, Side::Base, CosetLimits::default()).unwrap();
            assert!(elliptic_elements_in_k(&ctx, &t).is_empty());
        }
    }
}
