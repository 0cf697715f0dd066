//! The mod-8 isomorphism type of c(ℝⁿ) (e² = −1 convention) and the real
//! dimensions of its irreducible modules.
//!
//! The ladder, with n = 8k + r:
//!
//! | r | c(ℝⁿ)                               | irrep (real dim) |
//! |---|-------------------------------------|------------------|
//! | 1 | M_{2^{4k}}(ℂ)                       | 2^{4k+1}         |
//! | 2 | M_{2^{4k}}(ℍ)                       | 2^{4k+2}         |
//! | 3 | M_{2^{4k}}(ℍ) ⊕ M_{2^{4k}}(ℍ)       | 2^{4k+2}         |
//! | 4 | M_{2^{4k+1}}(ℍ)                     | 2^{4k+3}         |
//! | 5 | M_{2^{4k+2}}(ℂ)                     | 2^{4k+3}         |
//! | 6 | M_{2^{4k+3}}(ℝ)                     | 2^{4k+3}         |
//! | 7 | M_{2^{4k+3}}(ℝ) ⊕ M_{2^{4k+3}}(ℝ)   | 2^{4k+3}         |
//! | 8 | M_{2^{4k+4}}(ℝ)                     | 2^{4k+4}         |
//!
//! In dimensions 8k+3 the two summands are the quaternionic modules S₊ and
//! S₋, distinguished by the volume element acting as ±Id; in dimensions 8k
//! the single real module F = F₊ ⊕ F₋ is ℤ₂-graded by the volume element.

use std::fmt;

/// Ground field of the matrix algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixField {
    Real,
    Complex,
    Quaternion,
}

impl MatrixField {
    pub fn real_dim(self) -> u64 {
        match self {
            MatrixField::Real => 1,
            MatrixField::Complex => 2,
            MatrixField::Quaternion => 4,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            MatrixField::Real => "R",
            MatrixField::Complex => "C",
            MatrixField::Quaternion => "H",
        }
    }
}

/// Isomorphism type of c(ℝⁿ): one or two matrix algebras M_s(F).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraType {
    pub field: MatrixField,
    /// Matrix size s of each simple summand M_s(field).
    pub matrix_size: u64,
    /// 1 for a simple algebra, 2 for a direct sum of two copies.
    pub summands: u8,
    /// Ambient dimension n.
    pub n: u32,
}

impl AlgebraType {
    /// Real dimension of an irreducible module (either summand's column
    /// module): matrix_size × dim_ℝ(field).
    pub fn irrep_real_dim(&self) -> u64 {
        self.matrix_size * self.field.real_dim()
    }

    /// Dimension of the irreducible module over its ground field.
    pub fn irrep_field_dim(&self) -> u64 {
        self.matrix_size
    }

    /// Total real dimension of the algebra; always 2ⁿ.
    pub fn total_real_dim(&self) -> u128 {
        self.summands as u128
            * (self.matrix_size as u128 * self.matrix_size as u128)
            * self.field.real_dim() as u128
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = format!("M_{}({})", self.matrix_size, self.field.symbol());
        if self.summands == 2 {
            write!(f, "{one} (+) {one}")
        } else {
            write!(f, "{one}")
        }
    }
}

/// Isomorphism type of c(ℝⁿ) for n ≥ 1.
pub fn classify(n: u32) -> AlgebraType {
    assert!(n >= 1, "ambient dimension must be positive");
    assert!(n <= 100, "dimension too large for u64 matrix sizes");
    let (k, r) = if n.is_multiple_of(8) {
        (n / 8 - 1, 8)
    } else {
        (n / 8, n % 8)
    };
    let p = |e: u32| 1u64 << e;
    let (field, matrix_size, summands) = match r {
        1 => (MatrixField::Complex, p(4 * k), 1),
        2 => (MatrixField::Quaternion, p(4 * k), 1),
        3 => (MatrixField::Quaternion, p(4 * k), 2),
        4 => (MatrixField::Quaternion, p(4 * k + 1), 1),
        5 => (MatrixField::Complex, p(4 * k + 2), 1),
        6 => (MatrixField::Real, p(4 * k + 3), 1),
        7 => (MatrixField::Real, p(4 * k + 3), 2),
        8 => (MatrixField::Real, p(4 * k + 4), 1),
        _ => unreachable!(),
    };
    AlgebraType {
        field,
        matrix_size,
        summands,
        n,
    }
}

/// Dimension bookkeeping for the factorization S₊(G⊕E) = S₊(G) ⊗ F(E),
/// where G has dimension 8k+2 and E has dimension 8l with l ≥ 1.
///
/// S₊ of an (8k+2)-dimensional space means the irreducible module of
/// c(ℝ^{8k+3}) (the tangential convention), and F(E) is the real spinor
/// module in dimension 8l. Returns whether the real dimensions multiply up,
/// i.e. 2^{4(k+l)+2} = 2^{4k+2} · 2^{4l}, with every factor read off
/// `classify`.
pub fn factorization_dim_check(k: u32, l: u32) -> Result<bool, FactorizationError> {
    if l == 0 {
        return Err(FactorizationError::EmptyFactor);
    }
    let lhs = classify(8 * (k + l) + 3).irrep_real_dim();
    let s_plus = classify(8 * k + 3).irrep_real_dim();
    let f = classify(8 * l).irrep_real_dim();
    Ok(lhs == s_plus * f)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorizationError {
    #[error("E must have positive dimension (l >= 1)")]
    EmptyFactor,
}
