//! Exact arithmetic in the real Clifford algebra c(ℝⁿ) with the relations
//! eᵢeⱼ + eⱼeᵢ = −2δᵢⱼ, the pin⁻(n) group generated by unit vectors, and the
//! mod-8 structure of c(ℝⁿ) with explicit representation matrices.

mod classify;
mod element;
mod pin;
mod rep;

pub use classify::{classify, factorization_dim_check, AlgebraType, FactorizationError, MatrixField};
pub use element::{CliffordElement, VolumeElement};
pub use pin::{rational_unit_vector, PinWord, PinWordError};
pub use rep::{build_rep, equivariance_check, CliffordRep, RepError};

use crate::rat::Rational;

/// The volume element s_n = e₁⋯e_n together with its two classifying
/// predicates: centrality (n odd) and the sign of its square.
pub fn volume_element(n: u32) -> VolumeElement {
    assert!(n >= 1, "ambient dimension must be positive");
    let mut s = CliffordElement::one(n);
    for i in 1..=n {
        s = &s * &CliffordElement::basis_vector(n, i);
    }
    // s_n² = (−1)^{n(n+1)/2}; verified against blade arithmetic in tests.
    let exp = (n as u64 * (n as u64 + 1)) / 2;
    VolumeElement {
        element: s,
        is_central: n % 2 == 1,
        square_sign: if exp.is_multiple_of(2) { 1 } else { -1 },
    }
}

/// Exact Euclidean inner product of two coordinate vectors.
pub fn inner_product(u: &[Rational], v: &[Rational]) -> Rational {
    assert_eq!(u.len(), v.len(), "inner product dimension mismatch");
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}
