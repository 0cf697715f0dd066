//! Gaussian-weighted polynomial sections of Λ((ℝᵐ)*) over ℝᵐ and the
//! harmonic-oscillator operators acting on them.
//!
//! A section is Σ c_{α,B} · Z^α e^{−|Z|²/2} ⊗ B. The Gaussian factor is
//! implicit and never expanded: derivatives use the conjugation rule
//! ∂ᵢ(p·e^{−|Z|²/2}) = (∂ᵢp − Zᵢp)·e^{−|Z|²/2}, so all arithmetic stays
//! polynomial-exact.
//!
//! The operators are
//!
//! > D = Σᵢ (τ*·c(eᵢ)) ∇_{eᵢ},    V = Σᵢ Zᵢ · (τ*·ĉ(eᵢ)σ),
//!
//! with the volume transport τ* of [`super::structure_ops`]. They satisfy
//! (D+V)β = 0 for the vacuum β = e^{−|Z|²/2}⊗1 and
//! (D+V)² = −Δ + |Z|² + S exactly, at every even m.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{
    c_basis_action, check_even, check_guard, hat_basis_action, s_eigenvalue, structure_ops,
    ExteriorError, MATRIX_GUARD,
};
use crate::matrix::sparse_nullspace;
use crate::rat::{qi, Rational};

/// Monomial exponents in Z₁..Z_m.
pub type MultiIndex = Vec<u32>;

/// A finite linear combination of Z^α e^{−|Z|²/2} ⊗ blade with exact
/// rational coefficients. Canonical: no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianSection {
    m: u32,
    terms: BTreeMap<(MultiIndex, u64), Rational>,
}

impl GaussianSection {
    pub fn zero(m: u32) -> Self {
        GaussianSection {
            m,
            terms: BTreeMap::new(),
        }
    }

    /// The flat vacuum β = e^{−|Z|²/2} ⊗ 1.
    pub fn vacuum(m: u32) -> Self {
        Self::monomial(m, vec![0; m as usize], 0, Rational::one())
    }

    pub fn monomial(m: u32, alpha: MultiIndex, blade: u64, c: Rational) -> Self {
        assert_eq!(alpha.len(), m as usize, "multi-index length mismatch");
        assert!(blade >> m == 0, "blade outside the algebra");
        let mut s = Self::zero(m);
        s.add_term(alpha, blade, c);
        s
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, u64, &Rational)> {
        self.terms.iter().map(|((a, b), c)| (a, *b, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "rank mismatch");
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), *b, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        let mut out = Self::zero(self.m);
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), *b, v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&qi(-1)))
    }

    /// Max total polynomial degree appearing (0 for the zero section).
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(a, _)| a.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, alpha: MultiIndex, blade: u64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((alpha, blade)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Blade-level signed permutation: `action[blade] = (target, sign)`.
type SignedPerm = Vec<(u64, i8)>;

/// The oscillator operator package at rank m: the coefficient actions of
/// D and V and the diagonal of S.
#[derive(Clone, Debug)]
pub struct OscillatorOps {
    m: u32,
    /// A_i = τ*·c(eᵢ) as a signed blade permutation.
    a: Vec<SignedPerm>,
    /// W_i = τ*·ĉ(eᵢ)σ as a signed blade permutation.
    w: Vec<SignedPerm>,
    /// S eigenvalue (−1)^p (2p − m) per blade.
    s_diag: Vec<i64>,
}

impl OscillatorOps {
    pub fn new(m: u32) -> Result<Self, ExteriorError> {
        check_even(m)?;
        check_guard(m, MATRIX_GUARD)?;
        let ops = structure_ops(m)?;
        let dim = 1u64 << m;
        // τ* as a signed permutation (one ±1 per column)
        let tau_star: SignedPerm = (0..dim)
            .map(|col| {
                let mut hit = None;
                for row in 0..dim {
                    let v = &ops.tau_star[(row as usize, col as usize)];
                    if !v.is_zero() {
                        assert!(hit.is_none(), "τ* is not a signed permutation");
                        hit = Some((row, if v > &Rational::zero() { 1i8 } else { -1 }));
                    }
                }
                hit.expect("τ* has an empty column")
            })
            .collect();
        let mut a = Vec::with_capacity(m as usize);
        let mut w = Vec::with_capacity(m as usize);
        for i in 0..m {
            let mut ai = Vec::with_capacity(dim as usize);
            let mut wi = Vec::with_capacity(dim as usize);
            for blade in 0..dim {
                // A_i: c(e_i) first, then τ*
                let (t1, s1) = c_basis_action(m, i, blade);
                let (t2, s2) = tau_star[t1 as usize];
                ai.push((t2, s1 * s2));
                // W_i: σ, then ĉ(e_i), then τ*
                let sig = if blade.count_ones() % 2 == 0 { 1i8 } else { -1 };
                let (u1, r1) = hat_basis_action(m, i, blade);
                let (u2, r2) = tau_star[u1 as usize];
                wi.push((u2, sig * r1 * r2));
            }
            a.push(ai);
            w.push(wi);
        }
        let s_diag = (0..dim).map(|b| s_eigenvalue(m, b.count_ones())).collect();
        Ok(OscillatorOps { m, a, w, s_diag })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// D s = Σᵢ A_i ∇ᵢ s, with ∇ᵢ(p e^{−|Z|²/2}) = (∂ᵢp − Zᵢp) e^{−|Z|²/2}.
    pub fn apply_d(&self, s: &GaussianSection) -> GaussianSection {
        assert_eq!(s.m, self.m, "rank mismatch");
        let mut out = GaussianSection::zero(self.m);
        for ((alpha, blade), c) in &s.terms {
            for i in 0..self.m as usize {
                let (target, sg) = self.a[i][*blade as usize];
                let sgn = crate::rat::sign_rational(sg);
                // ∂_i Z^α = α_i Z^{α − e_i}
                if alpha[i] > 0 {
                    let mut da = alpha.clone();
                    da[i] -= 1;
                    out.add_term(da, target, c * &sgn * qi(alpha[i] as i64));
                }
                // −Z_i Z^α
                let mut za = alpha.clone();
                za[i] += 1;
                out.add_term(za, target, -(c * &sgn));
            }
        }
        out
    }

    /// V s = Σᵢ Zᵢ · W_i s.
    pub fn apply_v(&self, s: &GaussianSection) -> GaussianSection {
        assert_eq!(s.m, self.m, "rank mismatch");
        let mut out = GaussianSection::zero(self.m);
        for ((alpha, blade), c) in &s.terms {
            for i in 0..self.m as usize {
                let (target, sg) = self.w[i][*blade as usize];
                let mut za = alpha.clone();
                za[i] += 1;
                out.add_term(za, target, c * &crate::rat::sign_rational(sg));
            }
        }
        out
    }

    /// (D + V) s.
    pub fn apply_dv(&self, s: &GaussianSection) -> GaussianSection {
        self.apply_d(s).add(&self.apply_v(s))
    }

    /// (−Δ + |Z|² + S) s, via the conjugation rule: on the polynomial part
    /// this is (−Δ + 2Z·∂ + m)p plus the S eigenvalue of the blade; the
    /// |Z|² terms cancel against the Gaussian exactly.
    pub fn apply_oscillator_rhs(&self, s: &GaussianSection) -> GaussianSection {
        assert_eq!(s.m, self.m, "rank mismatch");
        let mut out = GaussianSection::zero(self.m);
        for ((alpha, blade), c) in &s.terms {
            let total: u32 = alpha.iter().sum();
            let diag = 2 * total as i64 + self.m as i64 + self.s_diag[*blade as usize];
            out.add_term(alpha.clone(), *blade, c * qi(diag));
            for i in 0..self.m as usize {
                if alpha[i] >= 2 {
                    let mut da = alpha.clone();
                    da[i] -= 2;
                    let coeff = alpha[i] as i64 * (alpha[i] as i64 - 1);
                    out.add_term(da, *blade, -(c * qi(coeff)));
                }
            }
        }
        out
    }
}

/// Result of an oscillator kernel computation.
#[derive(Clone, Debug)]
pub struct KernelResult {
    pub dim: usize,
    pub basis: Vec<GaussianSection>,
}

/// Kernel of the conjugated oscillator H = −Δ + 2Z·∂ + m + S on polynomial
/// coefficients with every exponent ≤ d, tensored with the blade space.
/// H preserves that box, so the restriction is honest; the kernel is
/// 1-dimensional, spanned by the constant polynomial ⊗ blade 1.
pub fn oscillator_kernel(m: u32, d: u32) -> Result<KernelResult, ExteriorError> {
    check_even(m)?;
    check_guard(m, MATRIX_GUARD)?;
    let poly_dim = (d as u64 + 1).pow(m);
    let total = poly_dim * (1u64 << m);
    const KERNEL_GUARD: u64 = 20_000;
    if total > KERNEL_GUARD {
        return Err(ExteriorError::IntractableKernel(total, KERNEL_GUARD));
    }
    let blades = 1u64 << m;
    let stride = d as u64 + 1;
    let poly_index = |alpha: &[u32]| -> u64 {
        alpha
            .iter()
            .rev()
            .fold(0u64, |acc, &e| acc * stride + e as u64)
    };
    let coord = |alpha: &[u32], blade: u64| (poly_index(alpha) * blades + blade) as usize;

    let mut alphas: Vec<MultiIndex> = Vec::with_capacity(poly_dim as usize);
    let mut cur = vec![0u32; m as usize];
    loop {
        alphas.push(cur.clone());
        let mut i = 0;
        loop {
            if i == m as usize {
                break;
            }
            if cur[i] < d {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        if i == m as usize {
            break;
        }
    }

    let mut rows = Vec::with_capacity(total as usize);
    for alpha in &alphas {
        let degree: u32 = alpha.iter().sum();
        for blade in 0..blades {
            let mut row = BTreeMap::new();
            let diag = 2 * degree as i64 + m as i64 + s_eigenvalue(m, blade.count_ones());
            if diag != 0 {
                row.insert(coord(alpha, blade), qi(diag));
            }
            // −Δ couples to the higher monomial Z^{α+2e_i}
            for i in 0..m as usize {
                if alpha[i] + 2 <= d {
                    let mut up = alpha.clone();
                    up[i] += 2;
                    let coeff = (alpha[i] as i64 + 2) * (alpha[i] as i64 + 1);
                    row.insert(coord(&up, blade), qi(-coeff));
                }
            }
            rows.push(row);
        }
    }

    let basis_vecs = sparse_nullspace(rows, total as usize);
    let mut basis = Vec::with_capacity(basis_vecs.len());
    for v in basis_vecs {
        let mut s = GaussianSection::zero(m);
        for (idx, c) in v.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let blade = idx as u64 % blades;
            let mut p = idx as u64 / blades;
            let mut alpha = vec![0u32; m as usize];
            for a in alpha.iter_mut() {
                *a = (p % stride) as u32;
                p /= stride;
            }
            s.add_term(alpha, blade, c);
        }
        basis.push(s);
    }
    Ok(KernelResult {
        dim: basis.len(),
        basis,
    })
}
