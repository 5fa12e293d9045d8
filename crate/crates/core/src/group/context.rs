use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{rational, BigRat, QuadRat};

use super::{GroupError, MoebiusMat};

/// Order `q = 1/(1 − 2a)` of the modular equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinity,
}

impl Order {
    /// The hypergeometric parameter `a = (q − 1)/(2q)`, exactly.
    pub fn a_exact(&self) -> BigRat {
        match *self {
            Order::Finite(q) => rational::rat(i64::from(q) - 1, 2 * i64::from(q)),
            Order::Infinity => rational::rat(1, 2),
        }
    }

    pub fn a(&self) -> f64 {
        rational::to_f64(&self.a_exact())
    }

    /// `λ_{2q} = 2cos(π/2q)` when it lies in a supported quadratic field.
    pub fn lambda_2q(&self) -> Option<QuadRat> {
        match self {
            Order::Infinity => Some(QuadRat::from_int(2)),
            Order::Finite(2) => QuadRat::surd(1, 2).ok(),
            Order::Finite(3) => QuadRat::surd(1, 3).ok(),
            _ => None,
        }
    }

    /// `λ_q = 2cos(π/q)`.
    pub fn lambda_q(&self) -> Option<QuadRat> {
        match self {
            Order::Infinity => Some(QuadRat::from_int(2)),
            Order::Finite(2) => Some(QuadRat::zero()),
            Order::Finite(3) => Some(QuadRat::one()),
            _ => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(q) => write!(f, "{q}"),
            Order::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Order::Infinity),
            other => other
                .parse::<u32>()
                .ok()
                .filter(|&q| q >= 2)
                .map(Order::Finite)
                .ok_or_else(|| GroupError::ParseOrder(other.into())),
        }
    }
}

/// Which membership criterion decides `A ∈ G_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipRule {
    /// `G_∞ = Γ(2)`: integer entries with `A ≡ I (mod 2)`.
    CongruenceLevelTwo,
    /// `G_3`: shape `(a, b√3; c√3, d)` with `a, b, c, d ∈ ℤ`, `ad − 3bc = 1`.
    SqrtThreeShape,
}

/// Which of the two commensurable groups a coset table enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Cosets `K\G_q`.
    Base,
    /// Cosets `K\G_q^{M_p}`.
    Conjugate,
}

/// The group `G_q = ⟨T, V⟩` together with the scaling `M_p τ = pτ`.
#[derive(Clone, Debug)]
pub struct GroupContext {
    order: Order,
    p: u32,
    rule: MembershipRule,
    t: MoebiusMat,
    v: MoebiusMat,
}

impl GroupContext {
    pub fn new(order: Order, p: u32) -> Result<Self, GroupError> {
        if p < 2 {
            return Err(GroupError::InvalidDegree(p));
        }
        let rule = match order {
            Order::Infinity => MembershipRule::CongruenceLevelTwo,
            Order::Finite(3) => MembershipRule::SqrtThreeShape,
            other => return Err(GroupError::UnsupportedOrder(other)),
        };
        let lam2q = order.lambda_2q().ok_or(GroupError::UnsupportedOrder(order))?;
        let lamq = order.lambda_q().ok_or(GroupError::UnsupportedOrder(order))?;
        let t = MoebiusMat::new(QuadRat::one(), lam2q.clone(), QuadRat::zero(), QuadRat::one())?;
        let v = MoebiusMat::new(lamq + QuadRat::one(), -&lam2q, lam2q, QuadRat::from_int(-1))?;
        Ok(Self { order, p, rule, t, v })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rule(&self) -> MembershipRule {
        self.rule
    }

    /// Discriminant of the field holding the entries of `G_q`.
    pub fn discriminant(&self) -> u32 {
        self.t.b().discriminant()
    }

    pub fn t(&self) -> &MoebiusMat {
        &self.t
    }

    pub fn v(&self) -> &MoebiusMat {
        &self.v
    }

    /// `S τ = −1/τ`.
    pub fn s(&self) -> MoebiusMat {
        MoebiusMat::from_ints(0, -1, 1, 0).expect("det 1")
    }

    /// Parabolic generator fixing `0`, `W = V⁻¹T` in PSL(2, ℝ).
    pub fn w(&self) -> MoebiusMat {
        &self.v.inverse() * &self.t
    }

    fn p_rat(&self) -> BigRat {
        BigRat::from_integer(BigInt::from(self.p))
    }

    /// `M_p⁻¹ A M_p = (a, b/p; pc, d)`, mapping `G_q` onto `G_q^{M_p}`.
    pub fn conjugate(&self, m: &MoebiusMat) -> MoebiusMat {
        let p = self.p_rat();
        MoebiusMat::from_entries_unchecked(
            m.a().clone(),
            m.b().scale(&(BigRat::one() / &p)),
            m.c().scale(&p),
            m.d().clone(),
        )
    }

    /// `M_p A M_p⁻¹ = (a, pb; c/p, d)`, the inverse of [`Self::conjugate`].
    pub fn unconjugate(&self, m: &MoebiusMat) -> MoebiusMat {
        let p = self.p_rat();
        MoebiusMat::from_entries_unchecked(
            m.a().clone(),
            m.b().scale(&p),
            m.c().scale(&(BigRat::one() / &p)),
            m.d().clone(),
        )
    }

    /// Generators `[T, V, T⁻¹, V⁻¹]` of the chosen side.
    pub fn generators(&self, side: Side) -> [MoebiusMat; 4] {
        let base = [self.t.clone(), self.v.clone(), self.t.inverse(), self.v.inverse()];
        match side {
            Side::Base => base,
            Side::Conjugate => base.map(|g| self.conjugate(&g)),
        }
    }

    /// `A ∈ G_q`.
    pub fn in_g(&self, m: &MoebiusMat) -> bool {
        match self.rule {
            MembershipRule::CongruenceLevelTwo => {
                let ints: Option<[BigInt; 4]> = integer_entries(m);
                let Some([a, b, c, d]) = ints else {
                    return false;
                };
                a.is_odd() && d.is_odd() && b.is_even() && c.is_even()
            }
            MembershipRule::SqrtThreeShape => {
                let diag_ok = [m.a(), m.d()].into_iter().all(|x| x.is_rational() && x.is_integral().0);
                let off_ok = [m.b(), m.c()].into_iter().all(|x| {
                    x.rational_part().is_zero()
                        && (x.is_zero() || x.discriminant() == 3)
                        && x.is_integral().1
                });
                diag_ok && off_ok
            }
        }
    }

    /// `A ∈ G_q^{M_p}`, i.e. `M_p A M_p⁻¹ ∈ G_q`.
    pub fn in_g_conj(&self, m: &MoebiusMat) -> bool {
        self.in_g(&self.unconjugate(m))
    }

    /// `A ∈ K = G_q ∩ G_q^{M_p}`.
    pub fn in_k(&self, m: &MoebiusMat) -> bool {
        self.in_g(m) && self.in_g_conj(m)
    }
}

fn integer_entries(m: &MoebiusMat) -> Option<[BigInt; 4]> {
    let conv = |x: &QuadRat| -> Option<BigInt> {
        (x.is_rational() && x.is_integral().0).then(|| x.rational_part().numer().clone())
    };
    Some([conv(m.a())?, conv(m.b())?, conv(m.c())?, conv(m.d())?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inf(p: u32) -> GroupContext {
        GroupContext::new(Order::Infinity, p).unwrap()
    }

    fn three(p: u32) -> GroupContext {
        GroupContext::new(Order::Finite(3), p).unwrap()
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> MoebiusMat {
        MoebiusMat::from_ints(a, b, c, d).unwrap()
    }

    fn s3(a: i64, b: i64, c: i64, d: i64) -> MoebiusMat {
        MoebiusMat::from_surd_shape(a, b, c, d, 3).unwrap()
    }

    #[test]
    fn standard_generators() {
        let g = inf(2);
        assert_eq!(*g.t(), m(1, 2, 0, 1));
        assert_eq!(*g.v(), m(3, -2, 2, -1));
        assert!(g.w().proj_eq(&m(1, 0, 2, 1)));
        let h = three(2);
        assert_eq!(*h.t(), s3(1, 1, 0, 1));
        assert_eq!(*h.v(), s3(2, -1, 1, -1));
        assert!(h.w().proj_eq(&s3(1, 0, 1, 1)));
    }

    #[test]
    fn generators_agree_with_hecke_words() {
        // V = T W⁻¹ = U², U = T S, and W = S⁻¹ T⁻¹ S.
        for g in [inf(2), three(2)] {
            let s = g.s();
            let u = g.t() * &s;
            assert!((&u * &u).proj_eq(g.v()));
            let w = &(&s.inverse() * &g.t().inverse()) * &s;
            assert!(w.proj_eq(&g.w()));
            assert!((g.t() * &w.inverse()).proj_eq(g.v()));
        }
    }

    #[test]
    fn elliptic_generator_order_three() {
        let g = three(3);
        assert!(g.v().pow(3).is_identity());
        assert!(!g.v().pow(2).is_identity());
    }

    #[test]
    fn membership_in_g() {
        assert!(inf(2).in_g(&m(1, 2, 0, 1)));
        assert!(!inf(2).in_g(&m(0, -1, 1, 0)));
        assert!(three(3).in_g(&s3(-2, 1, -3, 4)));
        assert!(!three(3).in_g(&three(3).s()));
        assert!(!three(3).in_g(&m(1, 2, 0, 1)));
    }

    #[test]
    fn membership_in_conjugate() {
        assert!(!inf(3).in_g_conj(&m(3, -2, 2, -1)));
        assert!(three(3).in_g_conj(&s3(-2, 1, -3, 4)));
        assert!(inf(2).in_g_conj(&m(1, 2, 0, 1)));
        let g = inf(3);
        assert!(!g.in_g_conj(&g.v().inverse()));
        assert!(!g.in_g_conj(&g.w()));
    }

    #[test]
    fn membership_in_k() {
        assert!(inf(2).in_k(&m(5, -4, 4, -3)));
        assert!(inf(3).in_k(&m(-5, 6, -6, 7)));
        let g = three(2);
        assert!(!g.in_k(g.v()));
    }

    #[test]
    fn conjugation_round_trip() {
        let g = three(5);
        let a = s3(-5, 4, -3, 7);
        assert_eq!(g.unconjugate(&g.conjugate(&a)), a);
        assert_eq!(g.conjugate(&a).det(), QuadRat::one());
    }

    #[test]
    fn unsupported_orders() {
        assert!(matches!(GroupContext::new(Order::Finite(4), 2), Err(GroupError::UnsupportedOrder(_))));
        assert!(matches!(GroupContext::new(Order::Infinity, 1), Err(GroupError::InvalidDegree(1))));
        assert_eq!("inf".parse::<Order>().unwrap(), Order::Infinity);
        assert_eq!("3".parse::<Order>().unwrap(), Order::Finite(3));
        assert!("1".parse::<Order>().is_err());
    }
}
