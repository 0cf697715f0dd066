use super::gaussian::*;
use super::*;
use crate::rat::{q, qi, Rational};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn basis(m: u32, i: u32) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); m as usize];
    v[i as usize] = Rational::one();
    v
}

#[test]
fn c_on_vacuum_creates() {
    // m=2: c(e1)·1 = e1* (blade {1} = mask 0b01)
    let c1 = clifford_op(2, &basis(2, 0)).unwrap();
    let mut applied = vec![Rational::zero(); 4];
    applied[0] = Rational::one();
    let out = c1.apply(&applied);
    assert_eq!(out[0b01], Rational::one());
    assert!(out.iter().enumerate().all(|(i, v)| i == 1 || v.is_zero()));
}

#[test]
fn c_squares_to_minus_norm() {
    let c1 = clifford_op(2, &basis(2, 0)).unwrap();
    assert_eq!(c1.mul(&c1), QMatrix::identity(4).scale(&qi(-1)));
    let e = vec![q(3, 5), q(4, 5)];
    let c = clifford_op(2, &e).unwrap();
    assert_eq!(c.mul(&c), QMatrix::identity(4).scale(&qi(-1)));
    let h = hat_op(2, &e).unwrap();
    assert_eq!(h.mul(&h), QMatrix::identity(4));
}

#[test]
fn c_and_hat_anticommute() {
    let e1 = basis(2, 0);
    let c = clifford_op(2, &e1).unwrap();
    let h = hat_op(2, &e1).unwrap();
    assert!(c.mul(&h).add(&h.mul(&c)).is_zero());
}

#[test]
fn sigma_and_number_diagonals() {
    let ops = structure_ops(2).unwrap();
    assert_eq!(ops.sigma.diag(), vec![qi(1), qi(-1), qi(-1), qi(1)]);
    assert_eq!(ops.number.diag(), vec![qi(0), qi(1), qi(1), qi(2)]);
}

#[test]
fn tau_star_equals_sigma_tau() {
    for m in [2u32, 4, 6] {
        let ops = structure_ops(m).unwrap();
        assert_eq!(
            ops.tau_star,
            ops.sigma.mul(&ops.tau),
            "τ* ≠ στ at m = {m}"
        );
    }
}

#[test]
fn tau_star_m2_sign_table() {
    // left multiplication by s₂: 1 ↦ e₁₂*, e₁* ↦ e₂*, e₂* ↦ −e₁*, e₁₂* ↦ −1
    let ops = structure_ops(2).unwrap();
    let expect = [(0b11, 0b00, 1), (0b10, 0b01, 1), (0b01, 0b10, -1), (0b00, 0b11, -1)];
    for (row, col, s) in expect {
        assert_eq!(ops.tau_star[(row, col)], qi(s));
    }
}

#[test]
fn tau_star_m4_is_involution_m2_is_not() {
    let t4 = structure_ops(4).unwrap().tau_star;
    assert_eq!(t4.mul(&t4), QMatrix::identity(16));
    let t2 = structure_ops(2).unwrap().tau_star;
    assert_eq!(t2.mul(&t2), QMatrix::identity(4).scale(&qi(-1)));
}

#[test]
fn tau_star_m4_sign_table() {
    // right multiplication by s₄: 1 ↦ e₁₂₃₄*, e₁* ↦ −e₂₃₄*
    let ops = structure_ops(4).unwrap();
    assert_eq!(ops.tau_star[(0b1111, 0b0000)], qi(1));
    assert_eq!(ops.tau_star[(0b1110, 0b0001)], qi(-1));
}

#[test]
fn s_operator_m2_diagonal() {
    let s = s_operator(2).unwrap();
    assert_eq!(s.diag(), vec![qi(-2), qi(0), qi(0), qi(2)]);
}

#[test]
fn c_chat_sum_is_two_n_minus_m() {
    for m in [2u32, 4, 6] {
        let lhs = c_chat_sum(m).unwrap();
        let ops = structure_ops(m).unwrap();
        let rhs = ops
            .number
            .scale(&qi(2))
            .sub(&QMatrix::identity(1 << m).scale(&qi(m as i64)));
        assert_eq!(lhs, rhs, "Σ c(e_i)ĉ(e_i) ≠ 2N − m at m = {m}");
    }
}

#[test]
fn s_closed_form_holds() {
    // s_operator internally asserts S = (2N−m)σ; run it for the test sizes
    for m in [2u32, 4, 6] {
        s_operator(m).unwrap();
    }
}

#[test]
fn spectrum_m2() {
    let spec = s_spectrum(2).unwrap();
    assert_eq!(
        spec,
        vec![
            (-2, BigUint::from(1u32)),
            (0, BigUint::from(2u32)),
            (2, BigUint::from(1u32)),
        ]
    );
}

#[test]
fn spectrum_matches_exact_diagonal_of_s() {
    // oracle: aggregate the diagonal of the matrix S itself
    for m in [2u32, 4, 6] {
        let s = s_operator(m).unwrap();
        let mut agg: BTreeMap<i64, BigUint> = BTreeMap::new();
        for v in s.diag() {
            let as_int: i64 = v.to_integer().try_into().unwrap();
            *agg.entry(as_int).or_default() += 1u32;
        }
        let expected: Vec<(i64, BigUint)> = agg.into_iter().collect();
        assert_eq!(s_spectrum(m).unwrap(), expected, "spectrum mismatch at m = {m}");
    }
}

#[test]
fn spectrum_minimum_is_minus_m_simple() {
    for m in [2u32, 4, 6, 8] {
        let spec = s_spectrum(m).unwrap();
        let (min_eig, mult) = &spec[0];
        assert_eq!(*min_eig, -(m as i64));
        assert_eq!(*mult, BigUint::from(1u32));
    }
}

#[test]
fn oscillator_structure_relations() {
    // the structural identities behind (D+V)² = −Δ + |Z|² + S, as exact
    // matrix checks: {A_i,A_j} = −2δ, {W_i,W_j} = +2δ, {A_i,W_j} = 0,
    // Σ A_i W_i = S
    for m in [2u32, 4] {
        let dim = 1usize << m;
        let ops = structure_ops(m).unwrap();
        let a: Vec<QMatrix> = (0..m)
            .map(|i| ops.tau_star.mul(&clifford_op(m, &basis(m, i)).unwrap()))
            .collect();
        let w: Vec<QMatrix> = (0..m)
            .map(|i| {
                ops.tau_star
                    .mul(&hat_op(m, &basis(m, i)).unwrap().mul(&ops.sigma))
            })
            .collect();
        let id = QMatrix::identity(dim);
        for i in 0..m as usize {
            for j in 0..m as usize {
                let delta = if i == j { 1 } else { 0 };
                assert_eq!(
                    a[i].mul(&a[j]).add(&a[j].mul(&a[i])),
                    id.scale(&qi(-2 * delta)),
                    "A anticommutator fails at m={m}, ij={i}{j}"
                );
                assert_eq!(
                    w[i].mul(&w[j]).add(&w[j].mul(&w[i])),
                    id.scale(&qi(2 * delta)),
                    "W anticommutator fails at m={m}, ij={i}{j}"
                );
                assert!(
                    a[i].mul(&w[j]).add(&w[j].mul(&a[i])).is_zero(),
                    "A/W cross term fails at m={m}, ij={i}{j}"
                );
            }
        }
        let mut s = QMatrix::zeros(dim, dim);
        for i in 0..m as usize {
            s = s.add(&a[i].mul(&w[i]));
        }
        assert_eq!(s, s_operator(m).unwrap(), "Σ A_i W_i ≠ S at m={m}");
    }
}

#[test]
fn iso_sends_blades_to_blades() {
    let iso = clifford_exterior_iso(2).unwrap();
    // e1 ↦ e1*, e1e2 ↦ e1*∧e2*
    assert_eq!(iso[(0b01, 0b01)], qi(1));
    assert_eq!(iso[(0b11, 0b11)], qi(1));
    for m in [2u32, 4] {
        let iso = clifford_exterior_iso(m).unwrap();
        let dim = 1usize << m;
        for col in 0..dim {
            for row in 0..dim {
                if !iso[(row, col)].is_zero() {
                    assert_eq!(
                        (row as u64).count_ones(),
                        (col as u64).count_ones(),
                        "grading broken at m={m}"
                    );
                }
            }
        }
    }
}

#[test]
fn iso_is_bijective_m6() {
    let iso = clifford_exterior_iso(6).unwrap();
    assert_eq!(iso.rank(), 64);
}

#[test]
fn dv_annihilates_vacuum() {
    for m in [2u32, 4, 6] {
        let ops = OscillatorOps::new(m).unwrap();
        let beta = GaussianSection::vacuum(m);
        assert!(ops.apply_dv(&beta).is_zero(), "(D+V)β ≠ 0 at m = {m}");
    }
}

#[test]
fn d_is_linear_and_kills_zero() {
    let ops = OscillatorOps::new(2).unwrap();
    assert!(ops.apply_d(&GaussianSection::zero(2)).is_zero());
    let s = GaussianSection::monomial(2, vec![1, 0], 0b01, q(2, 3));
    let t = GaussianSection::monomial(2, vec![0, 2], 0b10, q(-1, 2));
    let sum = s.add(&t);
    assert_eq!(ops.apply_d(&sum), ops.apply_d(&s).add(&ops.apply_d(&t)));
}

#[test]
fn oscillator_kernel_is_one_dimensional() {
    for (m, d) in [(2u32, 0u32), (2, 1), (2, 2), (4, 0), (4, 1)] {
        let k = oscillator_kernel(m, d).unwrap();
        assert_eq!(k.dim, 1, "kernel dim ≠ 1 at m={m}, d={d}");
        let b = &k.basis[0];
        let terms: Vec<_> = b.terms().collect();
        assert_eq!(terms.len(), 1);
        let (alpha, blade, _) = terms[0];
        assert!(alpha.iter().all(|&e| e == 0));
        assert_eq!(blade, 0);
    }
}

#[test]
fn oscillator_kernel_guards() {
    assert!(matches!(
        oscillator_kernel(3, 1),
        Err(ExteriorError::OddRank(3))
    ));
    assert!(matches!(
        oscillator_kernel(8, 4),
        Err(ExteriorError::IntractableKernel(..))
    ));
}

/// Independent kernel oracle: assemble the matrix of (D+V)² on the box
/// basis through the operator compositions themselves, then nullspace it
/// densely.
#[test]
fn oscillator_kernel_matches_squared_operator_oracle() {
    let (m, d) = (2u32, 2u32);
    let ops = OscillatorOps::new(m).unwrap();
    let stride = d as u64 + 1;
    let blades = 1u64 << m;
    let mut alphas = Vec::new();
    for a0 in 0..=d {
        for a1 in 0..=d {
            alphas.push(vec![a0, a1]);
        }
    }
    let coord = |alpha: &[u32], blade: u64| -> usize {
        let p = alpha.iter().rev().fold(0u64, |acc, &e| acc * stride + e as u64);
        (p * blades + blade) as usize
    };
    let total = alphas.len() * blades as usize;
    let mut h = QMatrix::zeros(total, total);
    for alpha in &alphas {
        for blade in 0..blades {
            let unit = GaussianSection::monomial(m, alpha.clone(), blade, qi(1));
            let image = ops.apply_dv(&ops.apply_dv(&unit));
            for (a2, b2, c) in image.terms() {
                assert!(
                    a2.iter().all(|&e| e <= d),
                    "(D+V)² left the box; identity broken"
                );
                h[(coord(a2, b2), coord(alpha, blade))] = c.clone();
            }
        }
    }
    let null = h.nullspace();
    assert_eq!(null.len(), 1);
    let v = &null[0];
    for (idx, c) in v.iter().enumerate() {
        if idx == coord(&[0, 0], 0) {
            assert!(!c.is_zero());
        } else {
            assert!(c.is_zero());
        }
    }
    // and it agrees with the closed-form implementation
    let k = oscillator_kernel(m, d).unwrap();
    assert_eq!(k.dim, null.len());
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn vector(m: u32) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rational(), m as usize)
}

fn section(m: u32) -> impl Strategy<Value = GaussianSection> {
    let blades = 1u64 << m;
    let alpha = proptest::collection::vec(0u32..=2, m as usize);
    proptest::collection::vec((alpha, 0..blades, small_rational()), 1..5).prop_map(
        move |terms| {
            terms
                .into_iter()
                .filter(|(a, _, _)| a.iter().sum::<u32>() <= 4)
                .fold(GaussianSection::zero(m), |acc, (a, b, c)| {
                    acc.add(&GaussianSection::monomial(m, a, b, c))
                })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clifford_op_anticommutators(e in vector(4), f in vector(4)) {
        let id = QMatrix::identity(16);
        let ip: Rational = e.iter().zip(&f).map(|(a, b)| a * b).sum();
        let ce = clifford_op(4, &e).unwrap();
        let cf = clifford_op(4, &f).unwrap();
        prop_assert_eq!(ce.mul(&cf).add(&cf.mul(&ce)), id.scale(&(qi(-2) * &ip)));
        let he = hat_op(4, &e).unwrap();
        let hf = hat_op(4, &f).unwrap();
        prop_assert_eq!(he.mul(&hf).add(&hf.mul(&he)), id.scale(&(qi(2) * &ip)));
        prop_assert!(ce.mul(&hf).add(&hf.mul(&ce)).is_zero());
    }

    #[test]
    fn dv_squares_to_oscillator_m2(s in section(2)) {
        let ops = OscillatorOps::new(2).unwrap();
        let lhs = ops.apply_dv(&ops.apply_dv(&s));
        prop_assert_eq!(lhs, ops.apply_oscillator_rhs(&s));
    }

    #[test]
    fn dv_squares_to_oscillator_m4(s in section(4)) {
        let ops = OscillatorOps::new(4).unwrap();
        let lhs = ops.apply_dv(&ops.apply_dv(&s));
        prop_assert_eq!(lhs, ops.apply_oscillator_rhs(&s));
    }
}
