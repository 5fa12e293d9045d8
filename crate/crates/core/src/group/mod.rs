//! Möbius-matrix machinery for `G_q`, its conjugate `G_q^{M_p}` and their
//! intersection `K`.

mod context;
mod cosets;
mod fixtures;
mod matrix;
mod word;

use alloc::string::String;

pub use context::{GroupContext, MembershipRule, Order, Side};
pub use cosets::{elliptic_elements_in_k, enumerate_cosets, CosetLimits, CosetTable, Gen};
pub use fixtures::{side_pairings, verify_generators, FixtureCheck, GeneratorFixture, GeneratorReport};
pub use matrix::{BoundaryPoint, MoebiusMat};
pub use word::{Letter, Word};

use crate::arith::{ArithError, QuadRat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("order q = {0} is not supported (only 3 and inf)")]
    UnsupportedOrder(Order),
    #[error("cannot parse order `{0}`")]
    ParseOrder(String),
    #[error("degree p must be at least 2, got {0}")]
    InvalidDegree(u32),
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(alloc::boxed::Box<QuadRat>),
    #[error("coset enumeration exceeded {0} cosets")]
    CapExceeded(usize),
    #[error("coset enumeration exceeded word length {0}")]
    WordCapExceeded(usize),
    #[error("cannot parse word `{0}`")]
    ParseWord(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
