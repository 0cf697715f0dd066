//! Characteristic-class polynomials and the hyperbolic series identities of
//! the Rokhlin congruences.
//!
//! [`GradedPoly`] is a polynomial in the Pontryagin symbols p₁, p₂, …
//! (degree 4i) and the Euler symbol e (degree 2), truncated at a total
//! degree bound. [`a_hat_polys`] produces the Â multiplicative sequence by
//! expanding the generating series (x/2)/sinh(x/2) over formal roots:
//! the log of the series is rewritten in power sums, Newton's identities
//! convert power sums to elementary symmetric functions (= the pᵢ), and the
//! exponential is resummed in the graded ring. [`PairingFunctional`]
//! evaluates ⟨·,[B]⟩ from user-supplied top-degree data.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{factorial, format_rational, q, qi, Rational};
use crate::series::{hyperbolic, HyperbolicFn, RationalSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharClassError {
    #[error("Â polynomials computed only for max_i <= 4, got {0}")]
    MaxIOutOfRange(u32),
    #[error("monomial {0} has degree {1}, expected the pairing dimension {2}")]
    PairingDegree(String, u32, u32),
    #[error("pairing data has no value for top-degree monomial {0}")]
    UnknownMonomial(String),
    #[error("malformed monomial: `{0}`")]
    MalformedMonomial(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A monomial ∏ pᵢ^{aᵢ} · e^b. Canonical: no trailing zero p-exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    p_exps: Vec<u32>,
    e_exp: u32,
}

impl Monomial {
    pub fn new(mut p_exps: Vec<u32>, e_exp: u32) -> Self {
        while p_exps.last() == Some(&0) {
            p_exps.pop();
        }
        Monomial { p_exps, e_exp }
    }

    pub fn unit() -> Self {
        Self::new(Vec::new(), 0)
    }

    /// pᵢ (1-indexed).
    pub fn p(i: u32) -> Self {
        assert!(i >= 1);
        let mut v = vec![0; i as usize];
        v[i as usize - 1] = 1;
        Self::new(v, 0)
    }

    pub fn e_power(b: u32) -> Self {
        Self::new(Vec::new(), b)
    }

    /// Cohomological degree: Σ 4i·aᵢ + 2b.
    pub fn degree(&self) -> u32 {
        let p: u32 = self
            .p_exps
            .iter()
            .enumerate()
            .map(|(i, a)| 4 * (i as u32 + 1) * a)
            .sum();
        p + 2 * self.e_exp
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.p_exps.len().max(other.p_exps.len());
        let mut p = vec![0u32; len];
        for (i, v) in p.iter_mut().enumerate() {
            *v = self.p_exps.get(i).copied().unwrap_or(0)
                + other.p_exps.get(i).copied().unwrap_or(0);
        }
        Self::new(p, self.e_exp + other.e_exp)
    }

    /// Parse `p1^2*e^3`, `e`, `p2`, `1` (whitespace tolerated).
    pub fn parse(s: &str) -> Result<Self, CharClassError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CharClassError::MalformedMonomial(s.to_string()));
        }
        let mut p_exps: Vec<u32> = Vec::new();
        let mut e_exp = 0u32;
        for factor in s.split('*') {
            let factor = factor.trim();
            if factor == "1" {
                continue;
            }
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (
                    b.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| CharClassError::MalformedMonomial(s.to_string()))?,
                ),
                None => (factor, 1),
            };
            if base == "e" {
                e_exp += exp;
            } else if let Some(idx) = base.strip_prefix('p') {
                let i: usize = idx
                    .parse()
                    .map_err(|_| CharClassError::MalformedMonomial(s.to_string()))?;
                if i == 0 {
                    return Err(CharClassError::MalformedMonomial(s.to_string()));
                }
                if p_exps.len() < i {
                    p_exps.resize(i, 0);
                }
                p_exps[i - 1] += exp;
            } else {
                return Err(CharClassError::MalformedMonomial(s.to_string()));
            }
        }
        Ok(Self::new(p_exps, e_exp))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, a) in self.p_exps.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("p{}", i + 1)),
                _ => parts.push(format!("p{}^{}", i + 1, a)),
            }
        }
        match self.e_exp {
            0 => {}
            1 => parts.push("e".to_string()),
            b => parts.push(format!("e^{b}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A graded polynomial over ℚ in {pᵢ, e}, truncated at `bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedPoly {
    bound: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero(bound: u32) -> Self {
        GradedPoly {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: u32) -> Self {
        Self::term(bound, Monomial::unit(), Rational::one())
    }

    pub fn term(bound: u32, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(bound);
        p.add_term(m, c);
        p
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut out = Self::zero(bound);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            if m.degree() <= bound {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&qi(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.bound);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut out = Self::zero(bound);
        for (ma, ca) in &self.terms {
            if ma.degree() > bound {
                continue;
            }
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if m.degree() <= bound {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    /// Same terms under a new degree bound (terms beyond it are dropped).
    pub fn rebound(&self, bound: u32) -> Self {
        let mut out = Self::zero(bound);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// The homogeneous part of the given degree.
    pub fn degree_part(&self, degree: u32) -> Self {
        let mut out = Self::zero(self.bound);
        for (m, c) in &self.terms {
            if m.degree() == degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Embed a series in e: the e^j coefficient lands in degree 2j.
    pub fn from_series(s: &RationalSeries, bound: u32) -> Self {
        let mut out = Self::zero(bound);
        for d in 0..=s.order() {
            let c = s.coeff(d);
            if !c.is_zero() && 2 * d as u32 <= bound {
                out.add_term(Monomial::e_power(d as u32), c);
            }
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || m.degree() > self.bound {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == Monomial::unit() {
                    format_rational(c)
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("{}*{}", format_rational(c), m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The Â multiplicative-sequence polynomials Â₀ = 1, Â₁, …, Â_{max_i}, with
/// Âᵢ homogeneous of degree 4i in the pⱼ.
///
/// Route: with Q(x) = (x/2)/sinh(x/2) and u = x², write
/// log ∏ⱼ Q(√uⱼ) = Σᵢ lᵢ·(Σⱼ uⱼⁱ); the inner power sums become polynomials
/// in the elementary symmetric functions pᵢ by Newton's identities, and the
/// outer exp is truncated in the graded ring.
pub fn a_hat_polys(max_i: u32) -> Result<Vec<GradedPoly>, CharClassError> {
    if max_i > 4 {
        return Err(CharClassError::MaxIOutOfRange(max_i));
    }
    let bound = 4 * max_i;
    if max_i == 0 {
        return Ok(vec![GradedPoly::one(0)]);
    }
    let w = max_i as usize;
    // sinh(x/2)/(x/2) = Σⱼ uʲ/(4ʲ(2j+1)!) as a series in u, then invert
    let mut g = RationalSeries::zero(w);
    for j in 0..=w {
        let denom = qi(4).pow(j as i32) * factorial(2 * j as u32 + 1);
        g = g.add(&RationalSeries::monomial(w, j, Rational::one() / denom));
    }
    let q_hat = g.invert().expect("unit constant term");
    // l = log(q̂) = Σ (−1)^{t+1} (q̂ − 1)^t / t
    let dev = q_hat.sub(&RationalSeries::one(w));
    let mut log = RationalSeries::zero(w);
    let mut dev_pow = RationalSeries::one(w);
    for t in 1..=w {
        dev_pow = dev_pow.mul(&dev);
        let sign = if t % 2 == 1 { qi(1) } else { qi(-1) };
        log = log.add(&dev_pow.scale(&(sign / qi(t as i64))));
    }
    // power sums sⱼ(u) in the pᵢ by Newton's identities
    let mut power_sums: Vec<GradedPoly> = vec![GradedPoly::one(bound)]; // s₀ placeholder
    for j in 1..=max_i {
        let mut s = GradedPoly::term(bound, Monomial::p(j), qi(j as i64));
        if j % 2 == 0 {
            s = s.scale(&qi(-1));
        }
        for t in 1..j {
            let sign = if t % 2 == 1 { qi(1) } else { qi(-1) };
            let term = GradedPoly::term(bound, Monomial::p(t), sign).mul(&power_sums[(j - t) as usize]);
            s = s.add(&term);
        }
        power_sums.push(s);
    }
    // L = Σⱼ lⱼ sⱼ, then Â = exp(L)
    let mut big_l = GradedPoly::zero(bound);
    for j in 1..=max_i {
        big_l = big_l.add(&power_sums[j as usize].scale(&log.coeff(j as usize)));
    }
    let mut total = GradedPoly::one(bound);
    let mut l_pow = GradedPoly::one(bound);
    for t in 1..=max_i {
        l_pow = l_pow.mul(&big_l);
        total = total.add(&l_pow.scale(&(Rational::one() / factorial(t))));
    }
    Ok((0..=max_i).map(|i| total.degree_part(4 * i)).collect())
}

/// All monomials in {pᵢ, e} of exactly the given cohomological degree:
/// e carries degree 2 and pᵢ degree 4i, so these are the candidate
/// top-degree entries of a pairing functional.
pub fn monomials_of_degree(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if !degree.is_multiple_of(2) {
        return out;
    }
    for b in 0..=(degree / 2) {
        let rem = degree - 2 * b;
        if !rem.is_multiple_of(4) {
            continue;
        }
        for part in partition_exponents(rem / 4) {
            out.push(Monomial::new(part, b));
        }
    }
    out
}

/// Exponent vectors (a₁, a₂, …) with Σ i·aᵢ = w, i.e. the partitions of w.
fn partition_exponents(w: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current[part as usize - 1] += 1;
            rec(remaining - part, part, current, out);
            current[part as usize - 1] -= 1;
        }
    }
    if w == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; w as usize];
    rec(w, w, &mut current, &mut out);
    out
}

/// ch(N_ℂ) for an oriented 2-plane bundle N with Euler class e:
/// N_ℂ ≅ L ⊕ L̄ with c₁(L) = ±e, so ch = e^e + e^{−e} = 2cosh(e).
pub fn ch_rank2_complexified(order: usize) -> Result<RationalSeries, SeriesError> {
    if order < 2 {
        return Err(SeriesError::TruncationTooSmall(order, 2));
    }
    Ok(hyperbolic(HyperbolicFn::Cosh, &qi(1), order)?.scale(&qi(2)))
}

/// The series identity reconciling the boundary-limit terms with the
/// −(1/2)tanh(e/4) term of the main congruence:
///
/// > (tanh(e/2) − e/2)/(e·tanh(e/2)) + (1/e)((e/2)/sinh(e/2) − 1)
/// >   = −(1/2)·tanh(e/4),
///
/// exactly through order D.
pub fn identity_a45(order: usize) -> Result<bool, SeriesError> {
    if order < 4 {
        return Err(SeriesError::TruncationTooSmall(order, 4));
    }
    let w = order + 4;
    let half = q(1, 2);
    let tanh_half = hyperbolic(HyperbolicFn::Tanh, &half, w)?;
    let e = RationalSeries::monomial(w, 1, Rational::one());
    let num1 = tanh_half.sub(&e.scale(&half));
    let den1 = e.mul(&tanh_half);
    let lhs1 = num1.div_factor_e(&den1)?;
    let x_over_sinh_half = hyperbolic(HyperbolicFn::XOverSinh, &half, w)?;
    let num2 = x_over_sinh_half.sub(&RationalSeries::one(w));
    let lhs2 = num2.div_factor_e(&e)?;
    let rhs = hyperbolic(HyperbolicFn::Tanh, &q(1, 4), w)?.scale(&q(-1, 2));
    let lhs = lhs1.truncate(order).add(&lhs2.truncate(order));
    Ok(lhs == rhs.truncate(order))
}

/// The series identity that collapses the difference of the two tangent
/// congruences to the ⟨Â(TB)·sinh(e),[B]⟩ form:
///
/// > tanh(e/4)·cosh(e) + (cosh(e) − cosh(e/2))/sinh(e/2) = sinh(e),
///
/// exactly through order D.
pub fn identity_a8(order: usize) -> Result<bool, SeriesError> {
    if order < 4 {
        return Err(SeriesError::TruncationTooSmall(order, 4));
    }
    let w = order + 4;
    let tanh_quarter = hyperbolic(HyperbolicFn::Tanh, &q(1, 4), w)?;
    let cosh_full = hyperbolic(HyperbolicFn::Cosh, &qi(1), w)?;
    let cosh_half = hyperbolic(HyperbolicFn::Cosh, &q(1, 2), w)?;
    let sinh_half = hyperbolic(HyperbolicFn::Sinh, &q(1, 2), w)?;
    let sinh_full = hyperbolic(HyperbolicFn::Sinh, &qi(1), w)?;
    let lhs = tanh_quarter
        .mul(&cosh_full)
        .truncate(order)
        .add(&cosh_full.sub(&cosh_half).div_factor_e(&sinh_half)?.truncate(order));
    Ok(lhs == sinh_full.truncate(order))
}

/// Linear evaluation ⟨·,[B]⟩: values on top-degree monomials, supplied as
/// data. Monomials below the top degree pair to zero by definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingFunctional {
    dim: u32,
    values: BTreeMap<Monomial, Rational>,
}

impl PairingFunctional {
    pub fn new(dim: u32) -> Self {
        PairingFunctional {
            dim,
            values: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn insert(&mut self, m: Monomial, value: Rational) -> Result<(), CharClassError> {
        if m.degree() != self.dim {
            return Err(CharClassError::PairingDegree(
                m.to_string(),
                m.degree(),
                self.dim,
            ));
        }
        self.values.insert(m, value);
        Ok(())
    }

    pub fn values(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.values.iter()
    }

    /// Strict pairing: every top-degree monomial of `x` must have a value.
    pub fn pair(&self, x: &GradedPoly) -> Result<Rational, CharClassError> {
        let mut acc = Rational::zero();
        for (m, c) in x.terms() {
            if m.degree() != self.dim {
                continue;
            }
            match self.values.get(m) {
                Some(v) => acc += c * v,
                None => return Err(CharClassError::UnknownMonomial(m.to_string())),
            }
        }
        Ok(acc)
    }

    /// Lenient pairing: unknown top-degree monomials evaluate to 0 and are
    /// reported back to the caller.
    pub fn pair_defaulting_zero(&self, x: &GradedPoly) -> (Rational, Vec<Monomial>) {
        let mut acc = Rational::zero();
        let mut missing = Vec::new();
        for (m, c) in x.terms() {
            if m.degree() != self.dim {
                continue;
            }
            match self.values.get(m) {
                Some(v) => acc += c * v,
                None => missing.push(m.clone()),
            }
        }
        (acc, missing)
    }
}
