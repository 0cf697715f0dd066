//! Mod 2 cohomology of RP^q and the pin⁻/spin decision procedure.
//!
//! H*(RP^q; ℤ₂) = ℤ₂[a]/(a^{q+1}) with a the degree-1 generator. The total
//! Stiefel–Whitney class is w(RP^q) = (1+a)^{q+1}, so its coefficients are
//! binomials mod 2, which Lucas' theorem turns into submask tests — the
//! whole range q ≤ 10⁴ sweeps instantly. RP^q admits a pin⁻ structure iff
//! w₁² + w₂ = 0, i.e. iff q ≡ 2, 3 (mod 4).

use std::fmt;

/// An element of ℤ₂[a]/(a^{q+1}): a bit vector of coefficients 0..=q.
#[derive(Clone, PartialEq, Eq)]
pub struct Z2Poly {
    q: u32,
    bits: Vec<u64>,
}

impl Z2Poly {
    pub fn zero(q: u32) -> Self {
        Z2Poly {
            q,
            bits: vec![0; (q as usize + 64) / 64],
        }
    }

    pub fn one(q: u32) -> Self {
        let mut p = Self::zero(q);
        p.set(0, true);
        p
    }

    /// The monomial a^d (zero if d exceeds the truncation).
    pub fn monomial(q: u32, d: u32) -> Self {
        let mut p = Self::zero(q);
        if d <= q {
            p.set(d, true);
        }
        p
    }

    pub fn truncation(&self) -> u32 {
        self.q
    }

    pub fn coeff(&self, d: u32) -> bool {
        if d > self.q {
            return false;
        }
        self.bits[(d / 64) as usize] >> (d % 64) & 1 == 1
    }

    pub fn set(&mut self, d: u32, v: bool) {
        assert!(d <= self.q, "degree beyond truncation");
        let (w, b) = ((d / 64) as usize, d % 64);
        if v {
            self.bits[w] |= 1 << b;
        } else {
            self.bits[w] &= !(1 << b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn degree(&self) -> Option<u32> {
        (0..=self.q).rev().find(|&d| self.coeff(d))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "truncation mismatch");
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
        out
    }

    /// Product in ℤ₂[a]/(a^{q+1}): shift-and-xor, truncating above q.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "truncation mismatch");
        let mut out = Self::zero(self.q);
        for d in 0..=self.q {
            if !self.coeff(d) {
                continue;
            }
            for e in 0..=(self.q - d) {
                if other.coeff(e) {
                    let t = d + e;
                    let cur = out.coeff(t);
                    out.set(t, !cur);
                }
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        // Frobenius over ℤ₂: (Σ c_d aᵈ)² = Σ c_d a^{2d}
        let mut out = Self::zero(self.q);
        for d in 0..=self.q {
            if self.coeff(d) && 2 * d <= self.q {
                out.set(2 * d, true);
            }
        }
        out
    }
}

impl fmt::Display for Z2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for d in 0..=self.q {
            if self.coeff(d) {
                terms.push(match d {
                    0 => "1".to_string(),
                    1 => "a".to_string(),
                    _ => format!("a^{d}"),
                });
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Z2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z2Poly(q={}, {})", self.q, self)
    }
}

/// C(n, k) mod 2 by Lucas' theorem: odd iff k is a submask of n.
pub fn binomial_mod2(n: u64, k: u64) -> bool {
    k & n == k
}

/// Total Stiefel–Whitney class w(RP^q) = (1+a)^{q+1} in ℤ₂[a]/(a^{q+1}).
pub fn sw_total(q: u32) -> Z2Poly {
    assert!(q >= 1, "q must be positive");
    let mut w = Z2Poly::zero(q);
    for d in 0..=q {
        if binomial_mod2(q as u64 + 1, d as u64) {
            w.set(d, true);
        }
    }
    w
}

/// The a² coefficient of w₁² + w₂ for RP^q (q ≥ 2): the obstruction to a
/// pin⁻ structure. Extracted from `sw_total`, whose degree-1 and degree-2
/// coefficients are w₁ and w₂.
pub fn pin_obstruction(q: u32) -> u8 {
    assert!(q >= 2, "obstruction needs q >= 2 so that a² != 0");
    let w = sw_total(q);
    let w1 = w.coeff(1);
    let w2 = w.coeff(2);
    // (w₁·a)² = w₁·a² over ℤ₂
    u8::from(w1 ^ w2)
}

/// Closed form of the same obstruction: ((q+1)(3q+2)/2) mod 2. Used as the
/// independent cross-check of the cohomological route.
pub fn pin_obstruction_closed_form(q: u32) -> u8 {
    let q = q as u64;
    (((q + 1) * (3 * q + 2) / 2) % 2) as u8
}

/// Whether a bundle with the given Stiefel–Whitney classes admits a pin⁻
/// structure: w₁² + w₂ = 0 in the ambient ring.
pub fn admits_pin_minus(w1: &Z2Poly, w2: &Z2Poly) -> Result<bool, ProjectiveError> {
    if w1.truncation() != w2.truncation() {
        return Err(ProjectiveError::TruncationMismatch {
            left: w1.truncation(),
            right: w2.truncation(),
        });
    }
    Ok(w1.square().add(w2).is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjectiveError {
    #[error("classes live in different rings: truncations {left} and {right}")]
    TruncationMismatch { left: u32, right: u32 },
}

/// The structure RP^q carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    /// q ≡ 3 (mod 4): orientable, spin.
    Spin,
    /// q ≡ 2 (mod 4): non-orientable but pin⁻. There are exactly two
    /// inequivalent pin⁻ structures on RP^{4k+2}; this module records the
    /// existence question only — the chosen-structure convention affects η
    /// sign conventions, which live outside this crate.
    PinMinusNonorientable,
    /// The obstruction w₁² + w₂ does not vanish.
    NotPinMinus,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::Spin => write!(f, "spin (orientable)"),
            StructureKind::PinMinusNonorientable => write!(f, "pin- (non-orientable)"),
            StructureKind::NotPinMinus => write!(f, "not pin-"),
        }
    }
}

/// Classify RP^q (q ≥ 2) by orientability and the pin⁻ obstruction.
pub fn structure_kind(q: u32) -> StructureKind {
    assert!(q >= 2, "classification needs q >= 2");
    if pin_obstruction(q) != 0 {
        StructureKind::NotPinMinus
    } else if q % 2 == 1 {
        StructureKind::Spin
    } else {
        StructureKind::PinMinusNonorientable
    }
}

/// w₁(RP^q) = (q+1 mod 2)·a: RP^q is orientable iff q is odd.
pub fn is_orientable(q: u32) -> bool {
    !sw_total(q).coeff(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: expand (1+a)^{q+1} by repeated truncated
    /// multiplication, no binomial shortcuts.
    fn sw_total_naive(q: u32) -> Z2Poly {
        let mut base = Z2Poly::one(q);
        base.set(1, true); // 1 + a
        let mut acc = Z2Poly::one(q);
        for _ in 0..=q {
            acc = acc.mul(&base);
        }
        acc
    }

    #[test]
    fn sw_examples() {
        // q=2: 1 + a + a²; q=3: 1; q=1: 1
        let w2 = sw_total(2);
        assert!(w2.coeff(0) && w2.coeff(1) && w2.coeff(2));
        assert_eq!(sw_total(3), Z2Poly::one(3));
        assert_eq!(sw_total(1), Z2Poly::one(1));
    }

    #[test]
    fn sw_matches_naive_expansion() {
        for q in 1..=160 {
            assert_eq!(sw_total(q), sw_total_naive(q), "mismatch at q = {q}");
        }
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(pin_obstruction(10), 0);
        assert_eq!(pin_obstruction(4), 1);
        assert_eq!(pin_obstruction(2), 0);
    }

    #[test]
    fn obstruction_matches_closed_form_over_sweep() {
        for q in 2..=10_000 {
            assert_eq!(
                pin_obstruction(q),
                pin_obstruction_closed_form(q),
                "obstruction mismatch at q = {q}"
            );
        }
    }

    #[test]
    fn structure_kinds() {
        assert_eq!(structure_kind(10), StructureKind::PinMinusNonorientable);
        assert_eq!(structure_kind(7), StructureKind::Spin);
        assert_eq!(structure_kind(4), StructureKind::NotPinMinus);
        assert_eq!(structure_kind(5), StructureKind::NotPinMinus);
    }

    #[test]
    fn structure_kind_iff_obstruction_vanishes() {
        for q in 2..=10_000 {
            let pin = structure_kind(q) != StructureKind::NotPinMinus;
            assert_eq!(pin, pin_obstruction(q) == 0, "q = {q}");
            assert_eq!(pin, q % 4 == 2 || q % 4 == 3, "q = {q}");
        }
    }

    #[test]
    fn orientability_parity() {
        for q in 1..=500 {
            assert_eq!(is_orientable(q), q % 2 == 1, "q = {q}");
        }
    }

    #[test]
    fn admits_pin_minus_from_projective_classes() {
        let grab = |q: u32| {
            let w = sw_total(q);
            let w1 = if w.coeff(1) {
                Z2Poly::monomial(q, 1)
            } else {
                Z2Poly::zero(q)
            };
            let w2 = if w.coeff(2) {
                Z2Poly::monomial(q, 2)
            } else {
                Z2Poly::zero(q)
            };
            (w1, w2)
        };
        let (w1, w2) = grab(10);
        assert_eq!(admits_pin_minus(&w1, &w2), Ok(true));
        let (w1, w2) = grab(4);
        assert_eq!(admits_pin_minus(&w1, &w2), Ok(false));

        let z4 = Z2Poly::zero(4);
        assert_eq!(admits_pin_minus(&z4, &z4), Ok(true));
        assert!(admits_pin_minus(&Z2Poly::zero(3), &Z2Poly::zero(4)).is_err());
    }

    proptest! {
        #[test]
        fn ring_is_commutative_and_distributive(
            a in proptest::collection::vec(any::<bool>(), 9),
            b in proptest::collection::vec(any::<bool>(), 9),
            c in proptest::collection::vec(any::<bool>(), 9),
        ) {
            let mk = |v: &[bool]| {
                let mut p = Z2Poly::zero(8);
                for (d, &bit) in v.iter().enumerate() {
                    p.set(d as u32, bit);
                }
                p
            };
            let (pa, pb, pc) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(pa.mul(&pb), pb.mul(&pa));
            prop_assert_eq!(pa.mul(&pb.add(&pc)), pa.mul(&pb).add(&pa.mul(&pc)));
            prop_assert_eq!(pa.square(), pa.mul(&pa));
        }
    }
}
