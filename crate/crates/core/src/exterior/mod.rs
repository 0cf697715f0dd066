//! Operator calculus on the exterior algebra Λ((ℝᵐ)*).
//!
//! Blades are indexed by subsets of {1..m} (bit i−1 ↔ eᵢ*), so operators
//! are 2ᵐ × 2ᵐ exact-rational matrices. The two Clifford actions are
//!
//! > c(e) = e*∧ − i_e,   ĉ(e) = e*∧ + i_e,
//!
//! with c(e)² = −|e|², ĉ(e)² = +|e|², and c, ĉ anticommuting with each
//! other. Under the vector-space identification c(ℝᵐ) = Λ((ℝᵐ)*), c(e) is
//! left Clifford multiplication by e and ĉ(e)σ is right Clifford
//! multiplication by e.
//!
//! # Volume transport convention
//!
//! The grading operators τ, τ* live on the spinor factorization F ⊗ F* and
//! must be transported to Λ((ℝᵐ)*). The transported object is the action of
//! the volume element s_m = e₁⋯e_m, but which side it multiplies on is a
//! convention, and the side matters because s_m² = (−1)^{m(m+1)/2}:
//!
//! * m ≡ 0 (mod 4) — s_m² = +1 and τ* is **right** multiplication by s_m
//!   (the transpose action on F*, as in the spinor picture). Explicitly
//!   τ*(blade B) = ±Bᶜ, e.g. for m = 4: 1 ↦ e₁₂₃₄*, e₁* ↦ −e₂₃₄*.
//! * m ≡ 2 (mod 4) — right multiplication by s_m squares to −Id and admits
//!   no real ±1 split, so no right-side transport satisfies the oscillator
//!   identities. The **left** multiplication by s_m is the unique transport
//!   that keeps every operator identity of the calculus exact
//!   ((D+V)β = 0 and (D+V)² = −Δ + |Z|² + S, see [`gaussian`]). For m = 2:
//!   1 ↦ e₁₂*, e₁* ↦ e₂*, e₂* ↦ −e₁*, e₁₂* ↦ −1.
//!
//! In both cases τ is defined as στ*, so the identity τ* = στ holds
//! exactly, and for m ≡ 0 (mod 4) this τ coincides with the honest left
//! volume action on F.

pub mod gaussian;

use num_traits::{One, Zero};

use crate::matrix::QMatrix;
use crate::rat::{qi, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("exterior rank must be even, got {0}")]
    OddRank(u32),
    #[error("size guard exceeded: m = {m} needs {dim}x{dim} matrices (limit m = {limit})")]
    SizeGuard { m: u32, dim: u64, limit: u32 },
    #[error("oscillator space of dimension {0} exceeds the tractability guard of {1}")]
    IntractableKernel(u64, u64),
}

/// Hard cap on 2ᵐ × 2ᵐ matrix construction (4096² at m = 12).
pub const MATRIX_GUARD: u32 = 12;

fn check_even(m: u32) -> Result<(), ExteriorError> {
    if m == 0 || !m.is_multiple_of(2) {
        Err(ExteriorError::OddRank(m))
    } else {
        Ok(())
    }
}

fn check_guard(m: u32, limit: u32) -> Result<(), ExteriorError> {
    if m > limit {
        Err(ExteriorError::SizeGuard {
            m,
            dim: 1u64 << m,
            limit,
        })
    } else {
        Ok(())
    }
}

/// Sign of inserting/removing index `i` (0-based) in blade `mask`:
/// (−1)^{#{j ∈ mask : j < i}}.
fn side_sign(mask: u64, i: u32) -> i8 {
    if (mask & ((1 << i) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Action of c(eᵢ) on a single blade: exterior multiplication when i is
/// absent, minus contraction when present. Returns (target blade, sign).
pub(crate) fn c_basis_action(m: u32, i: u32, mask: u64) -> (u64, i8) {
    debug_assert!(i < m);
    let s = side_sign(mask, i);
    if mask & (1 << i) == 0 {
        (mask | (1 << i), s)
    } else {
        (mask & !(1 << i), -s)
    }
}

/// Action of ĉ(eᵢ) on a single blade: exterior multiplication plus
/// contraction.
pub(crate) fn hat_basis_action(m: u32, i: u32, mask: u64) -> (u64, i8) {
    debug_assert!(i < m);
    let s = side_sign(mask, i);
    if mask & (1 << i) == 0 {
        (mask | (1 << i), s)
    } else {
        (mask & !(1 << i), s)
    }
}

/// Matrix of c(e) = e*∧ − i_e for an arbitrary rational vector e.
pub fn clifford_op(m: u32, e: &[Rational]) -> Result<QMatrix, ExteriorError> {
    check_even(m)?;
    check_guard(m, MATRIX_GUARD)?;
    assert_eq!(e.len(), m as usize, "vector dimension mismatch");
    let dim = 1usize << m;
    let mut out = QMatrix::zeros(dim, dim);
    for (i, c) in e.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for col in 0..dim as u64 {
            let (row, s) = c_basis_action(m, i as u32, col);
            let term = if s > 0 { c.clone() } else { -c.clone() };
            out[(row as usize, col as usize)] += term;
        }
    }
    Ok(out)
}

/// Matrix of ĉ(e) = e*∧ + i_e for an arbitrary rational vector e.
pub fn hat_op(m: u32, e: &[Rational]) -> Result<QMatrix, ExteriorError> {
    check_even(m)?;
    check_guard(m, MATRIX_GUARD)?;
    assert_eq!(e.len(), m as usize, "vector dimension mismatch");
    let dim = 1usize << m;
    let mut out = QMatrix::zeros(dim, dim);
    for (i, c) in e.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for col in 0..dim as u64 {
            let (row, s) = hat_basis_action(m, i as u32, col);
            let term = if s > 0 { c.clone() } else { -c.clone() };
            out[(row as usize, col as usize)] += term;
        }
    }
    Ok(out)
}

fn basis_vector(m: u32, i: u32) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); m as usize];
    v[i as usize] = Rational::one();
    v
}

/// The grading and volume operators on Λ((ℝᵐ)*).
#[derive(Clone, Debug)]
pub struct StructureOps {
    pub m: u32,
    /// Parity grading: (−1)^{|blade|}, diagonal.
    pub sigma: QMatrix,
    /// Number operator: |blade|, diagonal.
    pub number: QMatrix,
    /// τ = σ·τ*.
    pub tau: QMatrix,
    /// Volume transport; see the module docs for the m mod 4 convention.
    pub tau_star: QMatrix,
}

/// Build σ, τ, τ*, N for even m. The identity τ* = στ holds exactly by
/// construction and is also what the spinor picture gives for m ≡ 0 (mod 4).
pub fn structure_ops(m: u32) -> Result<StructureOps, ExteriorError> {
    check_even(m)?;
    check_guard(m, MATRIX_GUARD)?;
    let dim = 1usize << m;
    let sigma = QMatrix::diagonal(
        &(0..dim as u64)
            .map(|b| qi(if b.count_ones() % 2 == 0 { 1 } else { -1 }))
            .collect::<Vec<_>>(),
    );
    let number = QMatrix::diagonal(
        &(0..dim as u64)
            .map(|b| qi(b.count_ones() as i64))
            .collect::<Vec<_>>(),
    );
    let tau_star = if m.is_multiple_of(4) {
        // Right multiplication by s_m: R_{e_1} first, R_{e_m} last, where
        // R_{e_i} = ĉ(e_i)σ.
        let mut acc = QMatrix::identity(dim);
        for i in 0..m {
            let r = hat_op(m, &basis_vector(m, i))?.mul(&sigma);
            acc = r.mul(&acc);
        }
        acc
    } else {
        // Left multiplication by s_m: c(e_m) applied first, so it sits
        // rightmost in the matrix product c(e_1)·c(e_2)⋯c(e_m).
        let mut acc = QMatrix::identity(dim);
        for i in 0..m {
            let c = clifford_op(m, &basis_vector(m, i))?;
            acc = acc.mul(&c);
        }
        acc
    };
    let tau = sigma.mul(&tau_star);
    Ok(StructureOps {
        m,
        sigma,
        number,
        tau,
        tau_star,
    })
}

/// S = Σᵢ c(eᵢ)·c̃(eᵢ) with c̃(e) = ĉ(e)σ, computed from the definition and
/// checked against the closed form (2N − m)σ; the two must agree exactly.
pub fn s_operator(m: u32) -> Result<QMatrix, ExteriorError> {
    check_even(m)?;
    check_guard(m, MATRIX_GUARD)?;
    let ops = structure_ops(m)?;
    let dim = 1usize << m;
    let mut s = QMatrix::zeros(dim, dim);
    for i in 0..m {
        let e = basis_vector(m, i);
        let term = clifford_op(m, &e)?.mul(&hat_op(m, &e)?.mul(&ops.sigma));
        s = s.add(&term);
    }
    let closed = ops
        .number
        .scale(&qi(2))
        .sub(&QMatrix::identity(dim).scale(&qi(m as i64)))
        .mul(&ops.sigma);
    assert_eq!(s, closed, "S definition disagrees with (2N-m)σ; algebra bug");
    Ok(s)
}

/// Σᵢ c(eᵢ)ĉ(eᵢ) = 2N − m as a matrix (no σ twist).
pub fn c_chat_sum(m: u32) -> Result<QMatrix, ExteriorError> {
    check_even(m)?;
    check_guard(m, MATRIX_GUARD)?;
    let dim = 1usize << m;
    let mut s = QMatrix::zeros(dim, dim);
    for i in 0..m {
        let e = basis_vector(m, i);
        s = s.add(&clifford_op(m, &e)?.mul(&hat_op(m, &e)?));
    }
    Ok(s)
}

/// Eigenvalue of S on Λᵖ: (−1)ᵖ(2p − m).
pub fn s_eigenvalue(m: u32, p: u32) -> i64 {
    let v = 2 * p as i64 - m as i64;
    if p.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// The spectrum of S: eigenvalues (−1)ᵖ(2p − m) with multiplicity C(m, p),
/// aggregated over p = 0..m and sorted ascending. The minimum is −m, with a
/// one-dimensional eigenspace spanned by the blade 1 (for even m).
pub fn s_spectrum(m: u32) -> Result<Vec<(i64, num_bigint::BigUint)>, ExteriorError> {
    check_even(m)?;
    let mut agg: std::collections::BTreeMap<i64, num_bigint::BigUint> =
        std::collections::BTreeMap::new();
    for p in 0..=m {
        let eig = s_eigenvalue(m, p);
        *agg.entry(eig).or_default() += crate::rat::binomial(m, p);
    }
    Ok(agg.into_iter().collect())
}

/// The linear map c(ℝᵐ) → Λ((ℝᵐ)*) sending a Clifford blade x to the left
/// action of x applied to 1 ∈ Λ⁰. Returns the matrix in the sorted-blade
/// bases after verifying it is a grading-preserving bijection.
pub fn clifford_exterior_iso(m: u32) -> Result<QMatrix, ExteriorError> {
    check_even(m)?;
    check_guard(m, 10)?;
    let dim = 1usize << m;
    let mut iso = QMatrix::zeros(dim, dim);
    for blade in 0..dim as u64 {
        // apply c(e_{i_k}) … c(e_{i_1}) to the vacuum, highest index first,
        // so the composite is c(e_{i_1}) ∘ … ∘ c(e_{i_k}) read left to right
        let mut target = 0u64;
        let mut sign = 1i8;
        for i in (0..m).rev() {
            if blade & (1 << i) != 0 {
                let (t, s) = c_basis_action(m, i, target);
                target = t;
                sign *= s;
            }
        }
        debug_assert_eq!(target.count_ones(), blade.count_ones());
        iso[(target as usize, blade as usize)] = crate::rat::sign_rational(sign);
    }
    assert_eq!(iso.rank(), dim, "symbol map is singular; algebra bug");
    Ok(iso)
}

#[cfg(test)]
mod tests;
