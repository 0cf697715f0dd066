//! Reduced KO-theory of RP^{8k+2} and the dyadic index homomorphism.
//!
//! KO~(RP^{8k+2}) is cyclic of order 2^{4k+2}, generated by 1 − γ with γ
//! the tautological line bundle, so a class α ∈ KO(RP^{8k+2}) is a pair
//! (m_α, n_α): virtual rank plus a torsion coefficient normalized into
//! [0, 2^{4k+2}). The index homomorphism is
//!
//! > q_{8k+2}(α) = m_α/2^{4k+2} + n_α/2^{4k+1}  (mod 2),
//!
//! valued in ℤ{1/2^{4k+2}}/2ℤ. The topological index of a bundle whose
//! pushed-forward class is α equals q_{8k+2}(α), and the same number is the
//! predicted reduced η invariant (mod 2) of the twisted Dirac operator with
//! coefficient α — callers supply the KO class; no classifying maps or
//! embeddings are constructed here.

use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::rat::{is_dyadic, qi, reduce_mod, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KoError {
    #[error("value {0} is not dyadic (denominator must be a power of two)")]
    NonDyadic(String),
    #[error("classes live over different base levels: k = {0} and k = {1}")]
    LevelMismatch(u32, u32),
}

/// Order of KO~(RP^{8k+2}): 2^{4k+2}.
pub fn ko_order(k: u32) -> BigUint {
    BigUint::one() << (4 * k + 2)
}

/// Adams' count φ(n) = #{s : 0 < s ≤ n, s ≡ 0, 1, 2, 4 (mod 8)}.
pub fn adams_phi(n: u32) -> u32 {
    (1..=n).filter(|s| matches!(s % 8, 0 | 1 | 2 | 4)).count() as u32
}

/// Order of KO~(RP^n) for any n ≥ 1: 2^{φ(n)}. Agrees with `ko_order(k)`
/// at n = 8k+2.
pub fn ko_order_general(n: u32) -> BigUint {
    assert!(n >= 1, "n must be positive");
    BigUint::one() << adams_phi(n)
}

/// A class m + n·(1−γ) in KO(RP^{8k+2}), with n normalized into
/// [0, 2^{4k+2}).
#[derive(Clone, PartialEq, Eq)]
pub struct KOClassRP {
    k: u32,
    rank: BigInt,
    torsion: BigUint,
}

impl KOClassRP {
    /// Normalize an arbitrary (rank, n) pair at level k.
    pub fn new(k: u32, rank: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        let order = BigInt::from(ko_order(k));
        let mut n: BigInt = n.into() % &order;
        if n.is_negative() {
            n += &order;
        }
        KOClassRP {
            k,
            rank: rank.into(),
            torsion: n.to_biguint().expect("normalized torsion is nonnegative"),
        }
    }

    /// The zero class.
    pub fn zero(k: u32) -> Self {
        Self::new(k, 0, 0)
    }

    /// The class of a ⊕ ℝ^a ⊕ γ^{⊕b}: rewriting a + bγ = (a+b) − b(1−γ)
    /// gives rank a+b and torsion −b mod 2^{4k+2}.
    pub fn from_sum(a: u64, b: u64, k: u32) -> Self {
        Self::new(k, BigInt::from(a) + BigInt::from(b), -BigInt::from(b))
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    pub fn rank(&self) -> &BigInt {
        &self.rank
    }

    /// The coefficient of 1−γ, already in [0, 2^{4k+2}).
    pub fn torsion(&self) -> &BigUint {
        &self.torsion
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, KoError> {
        if self.k != other.k {
            return Err(KoError::LevelMismatch(self.k, other.k));
        }
        Ok(Self::new(
            self.k,
            &self.rank + &other.rank,
            BigInt::from(&self.torsion + &other.torsion),
        ))
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        Self::new(self.k, &self.rank * &c, BigInt::from(self.torsion.clone()) * &c)
    }
}

impl Add for &KOClassRP {
    type Output = KOClassRP;
    fn add(self, rhs: &KOClassRP) -> KOClassRP {
        self.checked_add(rhs).expect("KO class level mismatch")
    }
}

impl fmt::Display for KOClassRP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·(1-γ) in KO(RP^{})", self.rank, self.torsion, 8 * self.k + 2)
    }
}

impl fmt::Debug for KOClassRP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KOClassRP(k={}, m={}, n={})", self.k, self.rank, self.torsion)
    }
}

/// A dyadic rational reduced mod 2ℤ, canonical representative in [0, 2).
#[derive(Clone, PartialEq, Eq)]
pub struct DyadicMod2 {
    value: Rational,
}

impl DyadicMod2 {
    pub fn zero() -> Self {
        DyadicMod2 {
            value: Rational::zero(),
        }
    }

    /// Reduce an arbitrary dyadic rational into [0, 2). Non-dyadic input is
    /// an error.
    pub fn new(r: Rational) -> Result<Self, KoError> {
        if !is_dyadic(&r) {
            return Err(KoError::NonDyadic(crate::rat::format_rational(&r)));
        }
        Ok(DyadicMod2 {
            value: reduce_mod(&r, &qi(2)),
        })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        DyadicMod2 {
            value: reduce_mod(&(&self.value + &other.value), &qi(2)),
        }
    }
}

impl fmt::Display for DyadicMod2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::rat::format_rational(&self.value))
    }
}

impl fmt::Debug for DyadicMod2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyadicMod2({})", self)
    }
}

/// The index homomorphism q_{8k+2}(α) = m_α/2^{4k+2} + n_α/2^{4k+1} mod 2.
pub fn q_index(alpha: &KOClassRP) -> DyadicMod2 {
    let k = alpha.level();
    let denom_rank = Rational::new(BigInt::one(), BigInt::one() << (4 * k + 2));
    let denom_tors = Rational::new(BigInt::one(), BigInt::one() << (4 * k + 1));
    let value = Rational::from(alpha.rank.clone()) * denom_rank
        + Rational::from(BigInt::from(alpha.torsion.clone())) * denom_tors;
    DyadicMod2::new(value).expect("powers of two stay dyadic")
}

/// The mod 2 topological index of a bundle over an 8k+2-dimensional pin⁻
/// base whose pushed-forward KO(RP^{8k+2}) class is α. For bundles already
/// over RP^{8k+2} this is the bundle's own class, and the value is
/// q_{8k+2}(α) on the nose.
pub fn ind_t(alpha: &KOClassRP) -> DyadicMod2 {
    q_index(alpha)
}

/// The predicted reduced η invariant (mod 2) of the twisted Dirac operator
/// on RP^{8k+2} with coefficient α: numerically identical to `q_index`,
/// exposed under the analytic name.
pub fn eta_prediction(alpha: &KOClassRP) -> DyadicMod2 {
    q_index(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;
    use proptest::prelude::*;

    #[test]
    fn orders() {
        assert_eq!(ko_order(0), BigUint::from(4u32));
        assert_eq!(ko_order(1), BigUint::from(64u32));
        assert_eq!(ko_order(3), BigUint::from(16384u32));
    }

    #[test]
    fn general_order_agrees_on_8k_plus_2() {
        assert_eq!(ko_order_general(10), BigUint::from(64u32));
        assert_eq!(ko_order_general(2), BigUint::from(4u32));
        assert_eq!(ko_order_general(1), BigUint::from(2u32));
        for k in 0..=8 {
            assert_eq!(ko_order_general(8 * k + 2), ko_order(k), "k = {k}");
        }
    }

    #[test]
    fn from_sum_normalizes() {
        let triv = KOClassRP::from_sum(1, 0, 0);
        assert_eq!((triv.rank(), triv.torsion()), (&BigInt::from(1), &BigUint::zero()));
        let gamma = KOClassRP::from_sum(0, 1, 0);
        assert_eq!((gamma.rank(), gamma.torsion()), (&BigInt::from(1), &BigUint::from(3u32)));
        let mixed = KOClassRP::from_sum(1, 1, 1);
        assert_eq!((mixed.rank(), mixed.torsion()), (&BigInt::from(2), &BigUint::from(63u32)));
    }

    #[test]
    fn q_values() {
        assert_eq!(q_index(&KOClassRP::new(0, 1, 0)).value(), &q(1, 4));
        assert_eq!(q_index(&KOClassRP::new(0, 1, 3)).value(), &q(7, 4));
        assert!(q_index(&KOClassRP::zero(0)).is_zero());
        assert_eq!(eta_prediction(&KOClassRP::new(1, 1, 0)).value(), &q(1, 64));
        assert_eq!(ind_t(&KOClassRP::new(0, 1, 3)).value(), &q(7, 4));
    }

    #[test]
    fn annihilation_of_the_full_cyclic_group() {
        for k in 0..=2 {
            let gen = KOClassRP::new(k, 0, 1); // 1−γ
            let full = gen.scale(BigInt::from(ko_order(k)));
            assert!(q_index(&full).is_zero(), "k = {k}");
            assert_eq!(full, KOClassRP::zero(k));
        }
    }

    #[test]
    fn forced_carry_is_invisible_mod_2() {
        // n₁ + n₂ ≥ 2^{4k+2} contributes exactly 2 ≡ 0
        let a = KOClassRP::new(0, 0, 3);
        let b = KOClassRP::new(0, 0, 2);
        let sum = (&a + &b).clone();
        assert_eq!(sum.torsion(), &BigUint::from(1u32));
        let lhs = q_index(&sum);
        let rhs = q_index(&a).add(&q_index(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn level_mismatch_is_an_error() {
        let a = KOClassRP::zero(0);
        let b = KOClassRP::zero(1);
        assert_eq!(a.checked_add(&b), Err(KoError::LevelMismatch(0, 1)));
    }

    #[test]
    fn non_dyadic_rejected() {
        assert!(DyadicMod2::new(q(1, 3)).is_err());
        assert!(DyadicMod2::new(q(5, 8)).is_ok());
    }

    proptest! {
        #[test]
        fn q_is_a_homomorphism(
            k in 0u32..3,
            m1 in -200i64..200, n1 in 0i64..300,
            m2 in -200i64..200, n2 in 0i64..300,
        ) {
            let a = KOClassRP::new(k, m1, n1);
            let b = KOClassRP::new(k, m2, n2);
            let lhs = q_index(&a.checked_add(&b).unwrap());
            let rhs = q_index(&a).add(&q_index(&b));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn q_denominator_divides_group_order(
            k in 0u32..4,
            m in -10_000i64..10_000,
            n in -10_000i64..10_000,
        ) {
            let alpha = KOClassRP::new(k, m, n);
            let v = q_index(&alpha);
            // denominator | 2^{4k+2}
            let ord = BigInt::from(ko_order(k));
            let scaled = v.value() * Rational::from(ord);
            prop_assert!(scaled.is_integer());
        }
    }
}
