//! Truncated univariate power series with exact rational coefficients.
//!
//! The variable is called e throughout (it plays the Euler class in the
//! congruence formulas). A series of order D stores c₀..c_D; binary
//! operations truncate to the smaller order. Division requires an
//! invertible constant term, except for the valuation-aware form
//! `div_factor_e`, which cancels explicit powers of e first — that is how
//! the odd rational functions like (tanh(e/2) − e/2)/(e·tanh(e/2)) stay
//! well defined.

use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{factorial, format_rational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Rational>, // index = degree, len = order + 1
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("cannot invert a series with zero constant term")]
    NonInvertible,
    #[error("division needs numerator valuation >= denominator valuation ({num} < {den})")]
    ValuationTooSmall { num: usize, den: usize },
    #[error("cannot divide by the zero series")]
    ZeroDivisor,
    #[error("truncation order {0} too small to be meaningful (need at least {1})")]
    TruncationTooSmall(usize, usize),
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, Rational::one())
    }

    pub fn monomial(order: usize, degree: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        RationalSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Degree of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Rational::zero());
        RationalSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for d in 0..=order {
            out.coeffs[d] = self.coeff(d) + other.coeff(d);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                let b = other.coeff(j);
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += self.coeff(i) * b;
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse through the truncation order; the constant
    /// term must be nonzero.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let order = self.order();
        let inv0 = Rational::one() / &c0;
        let mut out = Self::zero(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let a = self.coeff(k);
                if a.is_zero() {
                    continue;
                }
                acc += a * &out.coeffs[n - k];
            }
            out.coeffs[n] = -acc * &inv0;
        }
        Ok(out)
    }

    /// self / other with an invertible denominator.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.invert()?))
    }

    /// self / other when both sides vanish to some order: factors
    /// e^{val(other)} out of numerator and denominator before dividing.
    /// The result has order reduced by val(other).
    pub fn div_factor_e(&self, other: &Self) -> Result<Self, SeriesError> {
        let dv = other.valuation().ok_or(SeriesError::ZeroDivisor)?;
        if dv == 0 {
            return self.div(other);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.order().saturating_sub(dv)));
        }
        let nv = self.valuation().unwrap();
        if nv < dv {
            return Err(SeriesError::ValuationTooSmall { num: nv, den: dv });
        }
        let shift = |s: &Self, by: usize| -> Self {
            RationalSeries {
                coeffs: s.coeffs[by..].to_vec(),
            }
        };
        shift(self, dv).div(&shift(other, dv))
    }

    /// exp(scale·e) through the given order.
    pub fn exp_scaled(scale: &Rational, order: usize) -> Self {
        let mut out = Self::zero(order);
        let mut p = Rational::one();
        for (d, c) in out.coeffs.iter_mut().enumerate() {
            *c = &p / factorial(d as u32);
            p *= scale;
        }
        out
    }

    /// Every odd-degree coefficient vanishes.
    pub fn is_even_series(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Every even-degree coefficient vanishes.
    pub fn is_odd_series(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = format_rational(c);
            terms.push(match d {
                0 => c,
                1 if c == "1" => "e".to_string(),
                1 => format!("{c}*e"),
                _ if c == "1" => format!("e^{d}"),
                _ => format!("{c}*e^{d}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0 + O(e^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(e^{})", terms.join(" + "), self.order() + 1)
        }
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The named hyperbolic series of the congruence formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperbolicFn {
    Sinh,
    Cosh,
    Tanh,
    /// x / sinh(x), evaluated at x = scale·e; the 0/0 at e = 0 is resolved
    /// by factoring one power of e.
    XOverSinh,
}

/// Exact Taylor coefficients of the named function of (scale·e), through
/// the given order, built from exponential series and series division.
pub fn hyperbolic(
    f: HyperbolicFn,
    scale: &Rational,
    order: usize,
) -> Result<RationalSeries, SeriesError> {
    if order < 1 {
        return Err(SeriesError::TruncationTooSmall(order, 1));
    }
    let ep = RationalSeries::exp_scaled(scale, order);
    let em = RationalSeries::exp_scaled(&-scale.clone(), order);
    let half = crate::rat::q(1, 2);
    let sinh = ep.sub(&em).scale(&half);
    let cosh = ep.add(&em).scale(&half);
    match f {
        HyperbolicFn::Sinh => Ok(sinh),
        HyperbolicFn::Cosh => Ok(cosh),
        HyperbolicFn::Tanh => sinh.div(&cosh),
        HyperbolicFn::XOverSinh => {
            if scale.is_zero() {
                // x/sinh(x) → 1 as the argument collapses
                return Ok(RationalSeries::one(order));
            }
            // (scale·e)/sinh(scale·e): both sides have valuation 1
            let x = RationalSeries::monomial(order, 1, scale.clone());
            x.div_factor_e(&sinh)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qi};
    use proptest::prelude::*;

    #[test]
    fn sinh_taylor() {
        let s = hyperbolic(HyperbolicFn::Sinh, &qi(1), 5).unwrap();
        assert_eq!(s.coeff(1), qi(1));
        assert_eq!(s.coeff(3), q(1, 6));
        assert_eq!(s.coeff(5), q(1, 120));
        assert!(s.is_odd_series());
    }

    #[test]
    fn tanh_quarter_taylor() {
        let t = hyperbolic(HyperbolicFn::Tanh, &q(1, 4), 3).unwrap();
        assert_eq!(t.coeff(1), q(1, 4));
        assert_eq!(t.coeff(3), q(-1, 192));
        assert!(t.is_odd_series());
    }

    #[test]
    fn cosh_zero_scale_is_one() {
        let c = hyperbolic(HyperbolicFn::Cosh, &qi(0), 4).unwrap();
        assert_eq!(c, RationalSeries::one(4));
        let x = hyperbolic(HyperbolicFn::XOverSinh, &qi(0), 4).unwrap();
        assert_eq!(x, RationalSeries::one(4));
    }

    #[test]
    fn x_over_sinh_taylor() {
        // x/sinh(x) = 1 − x²/6 + 7x⁴/360 − …
        let s = hyperbolic(HyperbolicFn::XOverSinh, &qi(1), 6).unwrap();
        assert_eq!(s.coeff(0), qi(1));
        assert_eq!(s.coeff(2), q(-1, 6));
        assert_eq!(s.coeff(4), q(7, 360));
        assert!(s.is_even_series());
    }

    #[test]
    fn division_guards() {
        let e = RationalSeries::monomial(4, 1, qi(1));
        assert_eq!(RationalSeries::one(4).div(&e), Err(SeriesError::NonInvertible));
        // e² / e is fine with factoring
        let e2 = RationalSeries::monomial(4, 2, qi(1));
        let r = e2.div_factor_e(&e).unwrap();
        assert_eq!(r.coeff(1), qi(1));
        // 1 / e is not
        assert!(matches!(
            RationalSeries::one(4).div_factor_e(&e),
            Err(SeriesError::ValuationTooSmall { .. })
        ));
        assert_eq!(
            e.div_factor_e(&RationalSeries::zero(4)),
            Err(SeriesError::ZeroDivisor)
        );
    }

    #[test]
    fn truncation_too_small() {
        assert!(matches!(
            hyperbolic(HyperbolicFn::Sinh, &qi(1), 0),
            Err(SeriesError::TruncationTooSmall(..))
        ));
    }

    fn small_series(order: usize) -> impl Strategy<Value = RationalSeries> {
        proptest::collection::vec((-8i64..=8, 1i64..=4).prop_map(|(n, d)| q(n, d)), order + 1)
            .prop_map(RationalSeries::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(
            f in small_series(8),
            g in small_series(8),
            h in small_series(8),
        ) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        }

        #[test]
        fn inverse_is_two_sided(f in small_series(8)) {
            prop_assume!(!f.coeff(0).is_zero());
            let inv = f.invert().unwrap();
            prop_assert_eq!(f.mul(&inv), RationalSeries::one(8));
            prop_assert_eq!(inv.mul(&f), RationalSeries::one(8));
        }
    }
}
