//! Words in pin⁻(n): ordered products of exact unit vectors, the character
//! χ(ω) = (−1)^{length}, and the twisted adjoint γ(ω) acting on ℝⁿ by
//! iterating the generator rule v ↦ e·v·e.

use num_traits::One;

use super::element::CliffordElement;
use super::inner_product;
use crate::rat::Rational;

/// An element of pin⁻(n) presented as a word of unit-vector factors.
///
/// Every factor must have ⟨v,v⟩ = 1 exactly; the constructor rejects
/// anything else. Factors need not be basis vectors — any rational point on
/// the unit sphere is a valid generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinWord {
    n: u32,
    factors: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PinWordError {
    #[error("factor {index} has squared norm {norm}, expected exactly 1")]
    NotUnit { index: usize, norm: Rational },
    #[error("factor {index} has length {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
}

impl PinWord {
    /// The empty word (the identity of pin⁻(n)).
    pub fn identity(n: u32) -> Self {
        PinWord {
            n,
            factors: Vec::new(),
        }
    }

    pub fn new(n: u32, factors: Vec<Vec<Rational>>) -> Result<Self, PinWordError> {
        for (index, f) in factors.iter().enumerate() {
            if f.len() != n as usize {
                return Err(PinWordError::DimensionMismatch {
                    index,
                    got: f.len(),
                    expected: n as usize,
                });
            }
            let norm = inner_product(f, f);
            if !norm.is_one() {
                return Err(PinWordError::NotUnit { index, norm });
            }
        }
        Ok(PinWord { n, factors })
    }

    /// Word of basis-vector generators e_{i₁}⋯e_{iⱼ}.
    pub fn from_basis_indices(n: u32, indices: &[u32]) -> Self {
        let factors = indices
            .iter()
            .map(|&i| {
                assert!((1..=n).contains(&i));
                let mut v = vec![Rational::from_integer(0.into()); n as usize];
                v[(i - 1) as usize] = Rational::one();
                v
            })
            .collect();
        PinWord { n, factors }
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Vec<Rational>] {
        &self.factors
    }

    /// Concatenation of words (the group product).
    pub fn concat(&self, other: &PinWord) -> PinWord {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        PinWord {
            n: self.n,
            factors,
        }
    }

    /// χ(ω) = (−1)^{number of factors}.
    pub fn chi(&self) -> i8 {
        if self.factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The word realized inside c(ℝⁿ).
    pub fn as_element(&self) -> CliffordElement {
        let mut acc = CliffordElement::one(self.n);
        for f in &self.factors {
            acc = &acc * &CliffordElement::from_vector(f);
        }
        acc
    }

    /// Group inverse: (−1)^j times the reversed word, as an element.
    pub fn inverse_element(&self) -> CliffordElement {
        let mut acc = CliffordElement::one(self.n);
        for f in self.factors.iter().rev() {
            acc = &acc * &CliffordElement::from_vector(f);
        }
        if self.factors.len() % 2 == 1 {
            acc = -&acc;
        }
        acc
    }

    /// The twisted adjoint γ(ω) applied to v, by iterating γ(e)(v) = e·v·e
    /// over the factors. The result is always pure degree 1; a failure of
    /// that extraction would be a bug in the algebra, so it panics.
    pub fn twisted_adjoint(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n as usize, "vector dimension mismatch");
        let mut x = CliffordElement::from_vector(v);
        for f in self.factors.iter().rev() {
            let e = CliffordElement::from_vector(f);
            x = &(&e * &x) * &e;
        }
        x.to_vector()
            .expect("twisted adjoint left the degree-1 subspace; algebra bug")
    }
}

/// A rational point on the unit sphere S^{n−1}, n = params.len() + 1: the
/// inverse stereographic image of u ∈ ℚ^{n−1},
/// v = (2u, 1 − |u|²) / (1 + |u|²).
/// This is exactly unit for every rational u, so it feeds `PinWord::new`
/// with dense sphere points without any rounding.
pub fn rational_unit_vector(params: &[Rational]) -> Vec<Rational> {
    let norm2: Rational = params.iter().map(|p| p * p).sum();
    let denom = Rational::one() + &norm2;
    let mut v: Vec<Rational> = params
        .iter()
        .map(|p| Rational::from_integer(2.into()) * p / &denom)
        .collect();
    v.push((Rational::one() - &norm2) / &denom);
    v
}
