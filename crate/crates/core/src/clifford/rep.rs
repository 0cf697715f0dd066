//! Explicit irreducible representation matrices for c(ℝⁿ), n ≤ 12.
//!
//! Seeds:
//! * n = 1..3 — left multiplications on ℂ and ℍ (Cayley–Dickson tables).
//! * n = 4..7 — left multiplications by imaginary octonion units on 𝕆 = ℝ⁸.
//!   Alternativity gives L_u L_v + L_v L_u = −2⟨u,v⟩ for imaginary u, v, so
//!   the first n of the seven L's generate c(ℝⁿ) on its minimal module.
//! * n = 8 — the doubled octonion module ℝ¹⁶ = 𝕆 ⊕ 𝕆 with
//!   g(v)(x, y) = (v·y, −v̄·x).
//! * n = 9..12 — periodicity c(ℝ^{n+8}) ≅ c(ℝⁿ) ⊗ M₁₆(ℝ): tensor the n−8
//!   seed with the volume element of the n = 8 representation.
//!
//! For n ≡ 3 (mod 4) the generators are globally negated if necessary so
//! that g₁⋯gₙ = +Id: this pins the module to S₊.

use num_traits::Zero;

use super::pin::PinWord;
use crate::matrix::QMatrix;
use crate::rat::{sign_rational, Rational};

/// Cayley–Dickson basis product in the algebra of dimension 2^t
/// (t = 1: ℂ, t = 2: ℍ, t = 3: 𝕆): x_i · x_j = sign · x_k.
///
/// Doubling rule: (a, b)(c, d) = (ac − d̄b, da + bc̄), with conjugation
/// (a, b)* = (ā, −b).
fn cd_basis_mul(t: u32, i: usize, j: usize) -> (i8, usize) {
    if t == 0 {
        return (1, 0);
    }
    let h = 1usize << (t - 1);
    let conj_sign = |idx: usize| if idx == 0 { 1i8 } else { -1i8 };
    if i < h && j < h {
        cd_basis_mul(t - 1, i, j)
    } else if i < h && j >= h {
        // (a,0)(0,d) = (0, d·a)
        let (s, k) = cd_basis_mul(t - 1, j - h, i);
        (s, k + h)
    } else if i >= h && j < h {
        // (0,b)(c,0) = (0, b·c̄)
        let (s, k) = cd_basis_mul(t - 1, i - h, j);
        (s * conj_sign(j), k + h)
    } else {
        // (0,b)(0,d) = (−d̄·b, 0)
        let (s, k) = cd_basis_mul(t - 1, j - h, i - h);
        (-(s * conj_sign(j - h)), k)
    }
}

/// Matrix of left multiplication by the basis unit x_u on the
/// 2^t-dimensional Cayley–Dickson algebra.
fn left_mul_matrix(t: u32, u: usize) -> QMatrix {
    let dim = 1usize << t;
    let mut m = QMatrix::zeros(dim, dim);
    for j in 0..dim {
        let (s, k) = cd_basis_mul(t, u, j);
        m[(k, j)] = sign_rational(s);
    }
    m
}

/// Generator matrices of an exact representation of c(ℝⁿ).
#[derive(Clone, Debug)]
pub struct CliffordRep {
    n: u32,
    gens: Vec<QMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("representation matrices only built for 1 <= n <= 12, got {0}")]
    DimensionOutOfRange(u32),
    #[error("generator matrices violate the Clifford relations")]
    RelationViolation,
}

impl CliffordRep {
    /// Wrap externally supplied generator matrices without validation.
    /// `relations_ok` and `equivariance_check` report violations.
    pub fn from_generators_unchecked(n: u32, gens: Vec<QMatrix>) -> Self {
        assert!(
            gens.len() == n as usize && !gens.is_empty(),
            "expected one generator matrix per dimension"
        );
        CliffordRep { n, gens }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Matrix dimension of the module.
    pub fn size(&self) -> usize {
        self.gens[0].rows()
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.gens
    }

    /// gᵢgⱼ + gⱼgᵢ = −2δᵢⱼ·Id, exactly.
    pub fn relations_ok(&self) -> bool {
        let id = QMatrix::identity(self.size());
        for i in 0..self.gens.len() {
            for j in i..self.gens.len() {
                let anti = self.gens[i]
                    .mul(&self.gens[j])
                    .add(&self.gens[j].mul(&self.gens[i]));
                let expected = if i == j {
                    id.scale(&crate::rat::qi(-2))
                } else {
                    QMatrix::zeros(self.size(), self.size())
                };
                if anti != expected {
                    return false;
                }
            }
        }
        true
    }

    /// ρ(s_n) = g₁⋯gₙ.
    pub fn volume(&self) -> QMatrix {
        let mut acc = QMatrix::identity(self.size());
        for g in &self.gens {
            acc = acc.mul(g);
        }
        acc
    }

    /// For n ≡ 3 (mod 4): the module is S₊, i.e. ρ(s_n) = +Id.
    pub fn splus_convention_ok(&self) -> bool {
        self.n % 4 != 3 || self.volume() == QMatrix::identity(self.size())
    }

    /// ρ of a degree-1 element Σ vᵢ eᵢ.
    pub fn vector_matrix(&self, v: &[Rational]) -> QMatrix {
        assert_eq!(v.len(), self.n as usize, "vector dimension mismatch");
        let mut acc = QMatrix::zeros(self.size(), self.size());
        for (g, c) in self.gens.iter().zip(v) {
            if !c.is_zero() {
                acc = acc.add(&g.scale(c));
            }
        }
        acc
    }

    /// ρ of a pin⁻ word (product of its factor matrices).
    pub fn word_matrix(&self, w: &PinWord) -> QMatrix {
        assert_eq!(w.dimension(), self.n, "word dimension mismatch");
        let mut acc = QMatrix::identity(self.size());
        for f in w.factors() {
            acc = acc.mul(&self.vector_matrix(f));
        }
        acc
    }

    /// ρ of a basis blade (ascending product of generators).
    pub fn blade_matrix(&self, mask: u64) -> QMatrix {
        let mut acc = QMatrix::identity(self.size());
        for i in 0..self.n {
            if mask & (1 << i) != 0 {
                acc = acc.mul(&self.gens[i as usize]);
            }
        }
        acc
    }

    /// Dimension of the span of all 2ⁿ blade matrices inside End(module):
    /// 2ⁿ when the representation is faithful, 2ⁿ⁻¹ when it kills one
    /// simple summand. Intended for small n.
    pub fn span_dimension(&self) -> usize {
        let d = self.size();
        let blades = 1usize << self.n;
        let mut flat = QMatrix::zeros(blades, d * d);
        for mask in 0..blades as u64 {
            let b = self.blade_matrix(mask);
            for r in 0..d {
                for c in 0..d {
                    if !b[(r, c)].is_zero() {
                        flat[(mask as usize, r * d + c)] = b[(r, c)].clone();
                    }
                }
            }
        }
        flat.rank()
    }
}

/// Build generator matrices for c(ℝⁿ), 1 ≤ n ≤ 12, on the minimal real
/// module; the matrix size always equals `classify(n).irrep_real_dim()`.
pub fn build_rep(n: u32) -> Result<CliffordRep, RepError> {
    if n == 0 || n > 12 {
        return Err(RepError::DimensionOutOfRange(n));
    }
    let gens = match n {
        1 => vec![left_mul_matrix(1, 1)],
        2 => vec![left_mul_matrix(2, 1), left_mul_matrix(2, 2)],
        3 => (1..=3)
            .map(|u| left_mul_matrix(2, u).neg())
            .collect(),
        4..=7 => (1..=n as usize).map(|u| left_mul_matrix(3, u)).collect(),
        8 => octonion_double_gens(),
        _ => tensor_periodicity_gens(n)?,
    };
    let mut rep = CliffordRep { n, gens };
    if n % 4 == 3 && rep.volume() != QMatrix::identity(rep.size()) {
        // Flipping every generator is an automorphism of the relations and,
        // for odd n, switches the sign of the volume element: it exchanges
        // the two inequivalent irreducibles, landing us on S₊.
        rep = CliffordRep {
            n,
            gens: rep.gens.iter().map(QMatrix::neg).collect(),
        };
    }
    debug_assert!(rep.relations_ok());
    Ok(rep)
}

/// The eight generators of c(ℝ⁸) on ℝ¹⁶ = 𝕆 ⊕ 𝕆:
/// g(v)(x, y) = (v·y, −v̄·x), for v running over 1, x₁, …, x₇.
fn octonion_double_gens() -> Vec<QMatrix> {
    let mut gens = Vec::with_capacity(8);
    for u in 0..8usize {
        let lv = left_mul_matrix(3, u);
        // −L_{v̄} = −L_v for v = 1, +L_v for imaginary v.
        let lower = if u == 0 { lv.neg() } else { lv.clone() };
        let mut g = QMatrix::zeros(16, 16);
        for r in 0..8 {
            for c in 0..8 {
                if !lv[(r, c)].is_zero() {
                    g[(r, c + 8)] = lv[(r, c)].clone();
                }
                if !lower[(r, c)].is_zero() {
                    g[(r + 8, c)] = lower[(r, c)].clone();
                }
            }
        }
        gens.push(g);
    }
    gens
}

/// c(ℝⁿ) ≅ c(ℝ^{n−8}) ⊗ M₁₆(ℝ) for 9 ≤ n ≤ 12: the small generators tensor
/// the n = 8 volume element (which anticommutes with every n = 8 generator
/// and squares to +Id), and the identity tensors the n = 8 generators.
fn tensor_periodicity_gens(n: u32) -> Result<Vec<QMatrix>, RepError> {
    let small = build_rep(n - 8)?;
    let big = CliffordRep {
        n: 8,
        gens: octonion_double_gens(),
    };
    let omega = big.volume();
    let id_small = QMatrix::identity(small.size());
    let mut gens: Vec<QMatrix> = small.generators().iter().map(|g| g.kron(&omega)).collect();
    gens.extend(big.generators().iter().map(|h| id_small.kron(h)));
    Ok(gens)
}

/// Pin⁻ equivariance of the Clifford action in a given representation:
/// ρ(ω)·ρ(e) = χ(ω)·ρ(γ(ω)e)·ρ(ω), as an exact matrix identity.
///
/// Fails with `RelationViolation` if the supplied representation does not
/// satisfy the Clifford relations.
pub fn equivariance_check(
    rep: &CliffordRep,
    word: &PinWord,
    e: &[Rational],
) -> Result<bool, RepError> {
    if !rep.relations_ok() {
        return Err(RepError::RelationViolation);
    }
    let lhs = rep.word_matrix(word).mul(&rep.vector_matrix(e));
    let gamma_e = word.twisted_adjoint(e);
    let mut rhs = rep.vector_matrix(&gamma_e).mul(&rep.word_matrix(word));
    if word.chi() < 0 {
        rhs = rhs.neg();
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod cd_tests {
    use super::*;

    #[test]
    fn quaternion_table() {
        // i·j = k, j·i = −k, i² = j² = k² = −1
        assert_eq!(cd_basis_mul(2, 1, 2), (1, 3));
        assert_eq!(cd_basis_mul(2, 2, 1), (-1, 3));
        assert_eq!(cd_basis_mul(2, 1, 1), (-1, 0));
        assert_eq!(cd_basis_mul(2, 3, 3), (-1, 0));
        assert_eq!(cd_basis_mul(2, 2, 3), (1, 1));
        assert_eq!(cd_basis_mul(2, 3, 2), (-1, 1));
    }

    #[test]
    fn octonion_units_square_to_minus_one() {
        for u in 1..8 {
            assert_eq!(cd_basis_mul(3, u, u), (-1, 0));
        }
        // and distinct imaginary units anticommute
        for u in 1..8 {
            for v in 1..8 {
                if u == v {
                    continue;
                }
                let (s, k) = cd_basis_mul(3, u, v);
                let (s2, k2) = cd_basis_mul(3, v, u);
                assert_eq!(k, k2);
                assert_eq!(s, -s2);
                assert_ne!(k, 0);
            }
        }
    }
}
