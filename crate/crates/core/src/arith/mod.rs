//! Exact arithmetic: rationals, quadratic-field elements and integer
//! polynomials.

mod poly;
mod quad;
pub mod rational;

use alloc::string::String;

pub use poly::IntPoly;
pub use quad::QuadRat;
pub use rational::BigRat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quadratic fields differ: √{0} vs √{1}")]
    DiscriminantMismatch(u32, u32),
    #[error("invalid discriminant {0}")]
    InvalidDiscriminant(u32),
    #[error("cannot parse `{0}`")]
    Parse(String),
}
