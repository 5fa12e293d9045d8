use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;

use crate::arith::{ArithError, QuadRat};

use super::GroupError;

/// A point of ℝ ∪ {∞}, the boundary of the upper half-plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryPoint {
    Finite(QuadRat),
    Infinity,
}

impl BoundaryPoint {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundaryPoint::Finite(x) => x.to_f64(),
            BoundaryPoint::Infinity => f64::INFINITY,
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => f.write_str("∞"),
        }
    }
}

/// `τ ↦ (aτ + b)/(cτ + d)` with `ad − bc = 1`, taken modulo `±I`.
///
/// Derived equality is on the stored entries; use [`MoebiusMat::proj_eq`] or
/// compare [`MoebiusMat::canonical`] forms for equality in PSL(2, ℝ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoebiusMat {
    a: QuadRat,
    b: QuadRat,
    c: QuadRat,
    d: QuadRat,
}

impl MoebiusMat {
    pub fn new(a: QuadRat, b: QuadRat, c: QuadRat, d: QuadRat) -> Result<Self, GroupError> {
        let m = Self { a, b, c, d };
        let det = m.try_det()?;
        if det != QuadRat::one() {
            return Err(GroupError::NotUnimodular(alloc::boxed::Box::new(det)));
        }
        Ok(m)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self, GroupError> {
        Self::new(
            QuadRat::from_int(a),
            QuadRat::from_int(b),
            QuadRat::from_int(c),
            QuadRat::from_int(d),
        )
    }

    /// `(a, b√d; c√d, e)` with integer `a, b, c, e`.
    pub fn from_surd_shape(a: i64, b: i64, c: i64, e: i64, d: u32) -> Result<Self, GroupError> {
        Self::new(
            QuadRat::from_int(a),
            QuadRat::surd(b, d)?,
            QuadRat::surd(c, d)?,
            QuadRat::from_int(e),
        )
    }

    /// Entries are assumed to have determinant one.
    pub(crate) fn from_entries_unchecked(a: QuadRat, b: QuadRat, c: QuadRat, d: QuadRat) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::from_entries_unchecked(QuadRat::one(), QuadRat::zero(), QuadRat::zero(), QuadRat::one())
    }

    pub fn a(&self) -> &QuadRat {
        &self.a
    }
    pub fn b(&self) -> &QuadRat {
        &self.b
    }
    pub fn c(&self) -> &QuadRat {
        &self.c
    }
    pub fn d(&self) -> &QuadRat {
        &self.d
    }

    pub fn entries(&self) -> [&QuadRat; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn try_det(&self) -> Result<QuadRat, ArithError> {
        self.a.try_mul(&self.d)?.try_sub(&self.b.try_mul(&self.c)?)
    }

    pub fn det(&self) -> QuadRat {
        self.try_det().expect("entries share one quadratic field")
    }

    pub fn trace(&self) -> QuadRat {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Self::from_entries_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn negated(&self) -> Self {
        Self::from_entries_unchecked(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        let e = |x: &QuadRat, y: &QuadRat, u: &QuadRat, v: &QuadRat| -> Result<QuadRat, ArithError> {
            x.try_mul(y)?.try_add(&u.try_mul(v)?)
        };
        Ok(Self::from_entries_unchecked(
            e(&self.a, &rhs.a, &self.b, &rhs.c)?,
            e(&self.a, &rhs.b, &self.b, &rhs.d)?,
            e(&self.c, &rhs.a, &self.d, &rhs.c)?,
            e(&self.c, &rhs.b, &self.d, &rhs.d)?,
        ))
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::identity(), |acc, _| &acc * &base)
    }

    /// Representative of `±A` whose first nonzero entry (in `a, b, c, d`
    /// order) is positive in its rational part, or in its radical part when
    /// the rational part vanishes.
    pub fn canonical(&self) -> Self {
        let lead = self.entries().into_iter().find(|x| !x.is_zero()).expect("det 1 matrix is nonzero");
        let key = match lead.rational_part().cmp(&Default::default()) {
            Ordering::Equal => lead.radical_part().cmp(&Default::default()),
            other => other,
        };
        if key == Ordering::Less {
            self.negated()
        } else {
            self.clone()
        }
    }

    /// Equality in PSL(2, ℝ).
    pub fn proj_eq(&self, other: &Self) -> bool {
        self == other || *self == other.negated()
    }

    pub fn is_identity(&self) -> bool {
        self.proj_eq(&Self::identity())
    }

    pub fn apply(&self, p: &BoundaryPoint) -> Result<BoundaryPoint, ArithError> {
        match p {
            BoundaryPoint::Infinity => {
                if self.c.is_zero() {
                    Ok(BoundaryPoint::Infinity)
                } else {
                    Ok(BoundaryPoint::Finite(self.a.try_div(&self.c)?))
                }
            }
            BoundaryPoint::Finite(x) => {
                let den = self.c.try_mul(x)?.try_add(&self.d)?;
                if den.is_zero() {
                    return Ok(BoundaryPoint::Infinity);
                }
                let num = self.a.try_mul(x)?.try_add(&self.b)?;
                Ok(BoundaryPoint::Finite(num.try_div(&den)?))
            }
        }
    }
}

impl Mul<&MoebiusMat> for &MoebiusMat {
    type Output = MoebiusMat;
    fn mul(self, rhs: &MoebiusMat) -> MoebiusMat {
        self.try_mul(rhs).expect("quadratic field mismatch")
    }
}

impl Mul for MoebiusMat {
    type Output = MoebiusMat;
    fn mul(self, rhs: MoebiusMat) -> MoebiusMat {
        &self * &rhs
    }
}

impl fmt::Display for MoebiusMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}
