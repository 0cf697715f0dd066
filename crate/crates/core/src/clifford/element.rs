//! Multivectors of c(ℝⁿ) in the sorted-blade basis.
//!
//! A blade is the subset of {1..n} of generator indices, stored as a bitmask
//! (bit i−1 for eᵢ). Products are computed by transposition counting plus
//! contraction with eᵢ² = −1, which keeps every element in canonical form
//! and makes equality structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rat::Rational;

/// An exact-rational multivector in c(ℝⁿ).
///
/// Invariants: every blade mask fits in the low `n` bits and no zero
/// coefficient is stored.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement {
    n: u32,
    terms: BTreeMap<u64, Rational>,
}

/// Sign of reordering e_A · e_B into ascending order: counts the pairs
/// (a ∈ A, b ∈ B) with a > b, each of which is one transposition.
fn reorder_sign(a: u64, b: u64) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product of two basis blades in c(ℝⁿ): the sign collects the reordering
/// transpositions and one factor −1 per contracted index (eᵢ² = −1).
pub(crate) fn blade_mul(a: u64, b: u64) -> (i8, u64) {
    let mut sign = reorder_sign(a, b);
    if (a & b).count_ones() % 2 == 1 {
        sign = -sign;
    }
    (sign, a ^ b)
}

impl CliffordElement {
    pub fn zero(n: u32) -> Self {
        assert!((1..=63).contains(&n), "ambient dimension out of range");
        CliffordElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: u32, c: Rational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(0, c);
        e
    }

    /// The generator eᵢ, 1-indexed.
    pub fn basis_vector(n: u32, i: u32) -> Self {
        assert!((1..=n).contains(&i), "generator index out of range");
        let mut e = Self::zero(n);
        e.add_term(1 << (i - 1), Rational::one());
        e
    }

    /// A basis blade given by its index subset.
    pub fn blade(n: u32, mask: u64, c: Rational) -> Self {
        assert!(mask >> n == 0, "blade outside {{1..n}}");
        let mut e = Self::zero(n);
        e.add_term(mask, c);
        e
    }

    /// Degree-1 element with the given coordinates.
    pub fn from_vector(coords: &[Rational]) -> Self {
        let n = coords.len() as u32;
        let mut e = Self::zero(n);
        for (i, c) in coords.iter().enumerate() {
            e.add_term(1 << i, c.clone());
        }
        e
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mask: u64) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// True if every stored blade has the given grade.
    pub fn is_pure_grade(&self, grade: u32) -> bool {
        self.terms.keys().all(|m| m.count_ones() == grade)
    }

    /// The grade-k part.
    pub fn grade_part(&self, grade: u32) -> Self {
        let mut e = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m.count_ones() == grade {
                e.add_term(*m, c.clone());
            }
        }
        e
    }

    /// Coordinates of a pure degree-1 element. `None` if any higher or
    /// scalar blade is present.
    pub fn to_vector(&self) -> Option<Vec<Rational>> {
        if !self.is_pure_grade(1) {
            return None;
        }
        let mut v = vec![Rational::zero(); self.n as usize];
        for (m, c) in &self.terms {
            v[m.trailing_zeros() as usize] = c.clone();
        }
        Some(v)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut e = Self::zero(self.n);
        for (m, v) in &self.terms {
            e.add_term(*m, v * c);
        }
        e
    }

    /// Reversal: e_{i1}…e_{ik} ↦ e_{ik}…e_{i1}, i.e. (−1)^{k(k−1)/2} per blade.
    pub fn reverse(&self) -> Self {
        let mut e = Self::zero(self.n);
        for (m, c) in &self.terms {
            let k = m.count_ones() as u64;
            let flip = (k * (k.saturating_sub(1)) / 2) % 2 == 1;
            e.add_term(*m, if flip { -c.clone() } else { c.clone() });
        }
        e
    }

    fn add_term(&mut self, mask: u64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
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

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        self.scale(&-Rational::one())
    }
}

impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = CliffordElement::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (sign, mask) = blade_mul(*ma, *mb);
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                out.add_term(mask, c);
            }
        }
        out
    }
}

impl Mul for CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: CliffordElement) -> CliffordElement {
        &self * &rhs
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let blade = if *m == 0 {
                String::new()
            } else {
                (0..self.n)
                    .filter(|i| m & (1 << i) != 0)
                    .map(|i| format!("e{}", i + 1))
                    .collect::<Vec<_>>()
                    .join("*")
            };
            let sep = if first { "" } else { " + " };
            if blade.is_empty() {
                write!(f, "{sep}{c}")?;
            } else if c.is_one() {
                write!(f, "{sep}{blade}")?;
            } else {
                write!(f, "{sep}{c}*{blade}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Result of `volume_element`.
#[derive(Clone, Debug)]
pub struct VolumeElement {
    pub element: CliffordElement,
    /// s_n commutes with every generator iff n is odd.
    pub is_central: bool,
    /// Sign of s_n² = (−1)^{n(n+1)/2}.
    pub square_sign: i8,
}

impl VolumeElement {
    /// Exact check of the centrality predicate against the algebra.
    pub fn centrality_holds(&self) -> bool {
        let n = self.element.dimension();
        (1..=n).all(|i| {
            let e = CliffordElement::basis_vector(n, i);
            let lhs = &self.element * &e;
            let rhs = &e * &self.element;
            if self.is_central {
                lhs == rhs
            } else {
                lhs == -&rhs
            }
        })
    }

    /// Exact check of square_sign against blade multiplication.
    pub fn square_sign_holds(&self) -> bool {
        let sq = &self.element * &self.element;
        let n = self.element.dimension();
        sq == CliffordElement::scalar(n, crate::rat::sign_rational(self.square_sign))
    }
}
