//! Thin helpers around `num_rational::BigRational`.
//!
//! The whole crate computes over `Rational`; these helpers cover the
//! constructions that come up constantly (small literals, powers of two,
//! exact parsing for the CLI and data files).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar type used everywhere: exact rationals over big integers.
pub type Rational = BigRational;

/// `q(n, d)` builds the exact rational n/d.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `qi(n)` builds the exact integer n as a rational.
pub fn qi(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}

/// 2^e as a big integer.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// 1/2^e as a rational.
pub fn inv_pow2(e: u32) -> Rational {
    Rational::new(BigInt::one(), pow2(e))
}

/// True if `r` is a dyadic rational (denominator a power of two).
/// The denominator of a reduced `BigRational` is always positive.
pub fn is_dyadic(r: &Rational) -> bool {
    let den = r.denom().magnitude();
    den == &(BigUint::one() << den.bits().saturating_sub(1) as u32)
}

/// Reduce `r` into the half-open interval `[0, modulus)`.
pub fn reduce_mod(r: &Rational, modulus: &Rational) -> Rational {
    let f = (r / modulus).floor();
    r - f * modulus
}

/// n! as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    Rational::from(acc)
}

/// Binomial coefficient C(n, k) as a big integer, by the product formula.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= n as u64 - i as u64;
        den *= i as u64 + 1;
    }
    num / den
}

/// Parse an exact rational literal: an optional sign, a decimal integer, and
/// an optional `/denominator`. Floating-point forms (`1.5`, `2e3`) are
/// rejected — data files and CLI flags are exact by contract.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(ParseRationalError::FloatRejected(s.to_string()));
    }
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
    let den: BigInt = match den_s {
        Some(d) => d
            .parse()
            .map_err(|_| ParseRationalError::Malformed(s.to_string()))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(num, den))
}

/// Render a rational as `p/q` (or just `p` for integers). Exact; never floats.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("floating-point literal rejected (exact rationals only): `{0}`")]
    FloatRejected(String),
    #[error("malformed rational literal: `{0}`")]
    Malformed(String),
    #[error("zero denominator: `{0}`")]
    ZeroDenominator(String),
}

/// Signs that come out of blade reordering and characters.
pub fn sign_rational(s: i8) -> Rational {
    if s >= 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// |r| for convenience in tests.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_exact_forms() {
        assert_eq!(parse_rational("-7/4").unwrap(), q(-7, 4));
        assert_eq!(parse_rational(" 3 ").unwrap(), qi(3));
        assert_eq!(parse_rational("6/-4").unwrap(), q(-3, 2));
    }

    #[test]
    fn parse_rejects_floats_and_garbage() {
        assert!(matches!(
            parse_rational("1.5"),
            Err(ParseRationalError::FloatRejected(_))
        ));
        assert!(matches!(
            parse_rational("2e3"),
            Err(ParseRationalError::FloatRejected(_))
        ));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn dyadic_detection() {
        assert!(is_dyadic(&q(7, 4)));
        assert!(is_dyadic(&qi(5)));
        assert!(!is_dyadic(&q(1, 3)));
        assert!(!is_dyadic(&q(1, 6)));
    }

    #[test]
    fn mod_reduction_lands_in_window() {
        assert_eq!(reduce_mod(&q(9, 4), &qi(2)), q(1, 4));
        assert_eq!(reduce_mod(&q(-1, 4), &qi(2)), q(7, 4));
        assert_eq!(reduce_mod(&qi(4), &qi(2)), qi(0));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), BigUint::from(70u32));
        assert_eq!(binomial(4, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
