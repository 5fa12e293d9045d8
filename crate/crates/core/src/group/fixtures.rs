//! Side-pairing transformations of the fundamental polygons of `K`, as words
//! in the generators together with their stated matrices.

use alloc::string::String;
use alloc::vec::Vec;

use super::{GroupContext, GroupError, MoebiusMat, Order, Word};

#[derive(Clone, Debug)]
pub struct GeneratorFixture {
    pub name: String,
    pub word: Word,
    pub matrix: MoebiusMat,
}

impl GeneratorFixture {
    pub fn new(name: &str, word: &str, matrix: MoebiusMat) -> Result<Self, GroupError> {
        Ok(Self { name: name.into(), word: word.parse()?, matrix })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: String,
    pub word_matches: bool,
    pub in_k: bool,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.word_matches && self.in_k
    }
}

#[derive(Clone, Debug, Default)]
pub struct GeneratorReport {
    pub checks: Vec<FixtureCheck>,
}

impl GeneratorReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(FixtureCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FixtureCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Checks each fixture matrix against its defining word (in PSL(2, ℝ)) and
/// its membership in `K`.
pub fn verify_generators(ctx: &GroupContext, fixtures: &[GeneratorFixture]) -> GeneratorReport {
    let checks = fixtures
        .iter()
        .map(|f| FixtureCheck {
            name: f.name.clone(),
            word_matches: f.word.eval(ctx).proj_eq(&f.matrix),
            in_k: ctx.in_k(&f.matrix),
        })
        .collect();
    GeneratorReport { checks }
}

/// The side pairings `A₁, A₂, …` for the four solved cases; `None` for any
/// other `(q, p)`.
pub fn side_pairings(order: Order, p: u32) -> Option<Vec<GeneratorFixture>> {
    let z = |a, b, c, d| MoebiusMat::from_ints(a, b, c, d).expect("det 1");
    let r3 = |a, b, c, d| MoebiusMat::from_surd_shape(a, b, c, d, 3).expect("det 1");
    let f = |name: &str, word: &str, m| GeneratorFixture::new(name, word, m).expect("valid word");
    let list = match (order, p) {
        (Order::Infinity, 2) => alloc::vec![
            f("A1", "T", z(1, 2, 0, 1)),
            f("A2", "V^2", z(5, -4, 4, -3)),
            f("A3", "V^-1 T V", z(-3, 2, -8, 5)),
        ],
        (Order::Infinity, 3) => alloc::vec![
            f("A1", "T", z(1, 2, 0, 1)),
            f("A2", "V^-1 T^2 V^-1", z(5, -8, 12, -19)),
            f("A3", "V^-1 T^-1 V^-1", z(-7, 10, -12, 17)),
            f("A4", "V^-3", z(-5, 6, -6, 7)),
            f("A5", "V^-1 T V^-1 T^-1 V", z(-5, 2, -18, 7)),
        ],
        (Order::Finite(3), 3) => alloc::vec![
            f("A1", "T", r3(1, 1, 0, 1)),
            f("A2", "V T V^-1", r3(-5, 4, -3, 7)),
            f("A3", "V^-1 T V", r3(-2, 1, -3, 4)),
        ],
        (Order::Finite(3), 2) => alloc::vec![
            f("A1", "T", r3(1, 1, 0, 1)),
            f("A2", "V^2 T V^2", r3(1, -1, 2, -5)),
            f("A3", "V^-1 S^-1 T S V", r3(5, -3, 4, -7)),
        ],
        _ => return None,
    };
    Some(list)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_side_pairing_fixtures_pass() {
        for (o, p) in [(Order::Infinity, 2), (Order::Infinity, 3), (Order::Finite(3), 3), (Order::Finite(3), 2)] {
            let ctx = GroupContext::new(o, p).unwrap();
            let report = verify_generators(&ctx, &side_pairings(o, p).unwrap());
            assert!(report.all_passed(), "q={o} p={p}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn identity_fixture_passes() {
        let ctx = GroupContext::new(Order::Infinity, 2).unwrap();
        let id = GeneratorFixture::new("I", "", MoebiusMat::identity()).unwrap();
        assert!(verify_generators(&ctx, &[id]).all_passed());
    }

    #[test]
    fn typo_is_named() {
        let ctx = GroupContext::new(Order::Infinity, 3).unwrap();
        let bad = GeneratorFixture::new("A5", "V^-1 T V^-1 T^-1 V", MoebiusMat::from_ints(-7, 10, -12, 17).unwrap()).unwrap();
        let report = verify_generators(&ctx, &[bad]);
        let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["A5"]);
    }
}
