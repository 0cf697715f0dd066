//! Runnable verification suites: every exact identity and property the
//! library promises, packaged as named checks with pass/fail outcomes.
//!
//! The `pindex verify-all` command runs [`all_checks`]; the acceptance test
//! suite runs the same checks and asserts them individually. Randomized
//! checks use a fixed-seed SplitMix64 stream, so results are bit-for-bit
//! reproducible.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::charclass::{a_hat_polys, monomials_of_degree, GradedPoly, Monomial, PairingFunctional};
use crate::clifford::{
    build_rep, classify, equivariance_check, rational_unit_vector, volume_element, CliffordElement,
    MatrixField, PinWord,
};
use crate::congruence::{a_hat_total, check, CongruenceData, CongruenceId};
use crate::exterior::gaussian::{oscillator_kernel, GaussianSection, OscillatorOps};
use crate::exterior::{
    c_chat_sum, clifford_exterior_iso, clifford_op, hat_op, s_operator, s_spectrum, structure_ops,
};
use crate::ko::{eta_prediction, ind_t, ko_order, ko_order_general, q_index, KOClassRP};
use crate::matrix::QMatrix;
use crate::projective::{pin_obstruction, pin_obstruction_closed_form, structure_kind, StructureKind};
use crate::rat::{q, qi, Rational};
use crate::series::{hyperbolic, HyperbolicFn, RationalSeries};

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            passed: false,
            detail: detail.into(),
        }
    }
}

/// SplitMix64: tiny, seedable, and stable forever — the verification
/// streams must not drift across library upgrades.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.below((hi - lo + 1) as u64)) as i64
    }

    /// Small nonzero-denominator rational in [−max_num, max_num] / [1, max_den].
    pub fn rational(&mut self, max_num: i64, max_den: i64) -> Rational {
        q(self.int_in(-max_num, max_num), self.int_in(1, max_den))
    }
}

// ---------------------------------------------------------------------------
// The nine acceptance checks
// ---------------------------------------------------------------------------

/// KO-group orders: 2^{4k+2} for k = 0..8, matching the Adams count.
pub fn check_ko_orders() -> CheckOutcome {
    let name = "ko-orders";
    for k in 0..=8u32 {
        let expected = num_bigint::BigUint::one() << (4 * k + 2);
        if ko_order(k) != expected {
            return CheckOutcome::fail(name, format!("ko_order({k}) != 2^{}", 4 * k + 2));
        }
        if ko_order_general(8 * k + 2) != ko_order(k) {
            return CheckOutcome::fail(name, format!("Adams count disagrees at k = {k}"));
        }
    }
    CheckOutcome::pass(name, "orders 2^{4k+2} for k = 0..8, both routes")
}

/// Stiefel–Whitney obstruction sweep: the a² coefficient of w₁² + w₂ of
/// RP^q equals ((q+1)(3q+2)/2) mod 2 for every 2 ≤ q ≤ 10⁴.
pub fn check_sw_obstruction_sweep() -> CheckOutcome {
    let name = "sw-obstruction-sweep";
    for q_ in 2..=10_000u32 {
        if pin_obstruction(q_) != pin_obstruction_closed_form(q_) {
            return CheckOutcome::fail(name, format!("mismatch at q = {q_}"));
        }
    }
    CheckOutcome::pass(name, "cohomological route = closed form for 2 <= q <= 10^4")
}

/// q_{8k+2} is a homomorphism mod 2: 1000 random pairs at each k ∈ {0,1,2},
/// with forced carry cases n₁ + n₂ ≥ 2^{4k+2}.
pub fn check_q_homomorphism() -> CheckOutcome {
    let name = "q-homomorphism";
    let mut rng = SplitMix64::new(0x51CA_FE01);
    let mut carries = 0u32;
    for k in 0..=2u32 {
        let order = 1i64 << (4 * k + 2);
        for trial in 0..1000 {
            let (n1, n2) = if trial % 10 == 0 {
                // force a carry
                (order - 1 - rng.int_in(0, 1), order - 1)
            } else {
                (rng.int_in(0, 2 * order), rng.int_in(0, 2 * order))
            };
            if (n1 % order) + (n2 % order) >= order {
                carries += 1;
            }
            let a = KOClassRP::new(k, rng.int_in(-1000, 1000), n1);
            let b = KOClassRP::new(k, rng.int_in(-1000, 1000), n2);
            let lhs = q_index(&a.checked_add(&b).expect("same level"));
            let rhs = q_index(&a).add(&q_index(&b));
            if lhs != rhs {
                return CheckOutcome::fail(name, format!("violated at k={k}: {a:?} + {b:?}"));
            }
            // and the three names agree pointwise
            if ind_t(&a) != q_index(&a) || eta_prediction(&a) != q_index(&a) {
                return CheckOutcome::fail(name, "index aliases disagree".to_string());
            }
        }
    }
    CheckOutcome::pass(
        name,
        format!("3000 random pairs, {carries} carries, all additive mod 2"),
    )
}

/// Representation dimensions and relations: classify(8k+3) has quaternionic
/// irrep dimension 2^{4k} for k ∈ {0,1}; all generator matrices for n ≤ 11
/// satisfy the Clifford relations exactly; the volume element acts as +Id
/// for n ≡ 3 (mod 4).
pub fn check_clifford_reps() -> CheckOutcome {
    let name = "clifford-reps";
    for k in 0..=1u32 {
        let t = classify(8 * k + 3);
        if t.field != MatrixField::Quaternion || t.irrep_field_dim() != 1 << (4 * k) {
            return CheckOutcome::fail(name, format!("classification wrong at n = {}", 8 * k + 3));
        }
    }
    for n in 1..=11u32 {
        let rep = match build_rep(n) {
            Ok(r) => r,
            Err(e) => return CheckOutcome::fail(name, format!("build_rep({n}): {e}")),
        };
        if rep.size() as u64 != classify(n).irrep_real_dim() {
            return CheckOutcome::fail(name, format!("module size off at n = {n}"));
        }
        if !rep.relations_ok() {
            return CheckOutcome::fail(name, format!("Clifford relations fail at n = {n}"));
        }
        if !rep.splus_convention_ok() {
            return CheckOutcome::fail(name, format!("volume convention fails at n = {n}"));
        }
    }
    CheckOutcome::pass(name, "exact relations and module sizes for n <= 11")
}

/// The operator S: definition = (2N − m)σ, Σc(eᵢ)ĉ(eᵢ) = 2N − m, spectrum
/// (−1)ᵖ(2p − m) with binomial multiplicities, lowest eigenvalue −m simple.
pub fn check_s_operator_identities() -> CheckOutcome {
    let name = "s-operator-identities";
    for m in [2u32, 4, 6, 8] {
        // s_operator internally asserts the closed form agreement
        let s = match s_operator(m) {
            Ok(s) => s,
            Err(e) => return CheckOutcome::fail(name, format!("m={m}: {e}")),
        };
        let ops = structure_ops(m).expect("even m");
        let two_n_minus_m = ops
            .number
            .scale(&qi(2))
            .sub(&QMatrix::identity(1 << m).scale(&qi(m as i64)));
        if c_chat_sum(m).expect("even m") != two_n_minus_m {
            return CheckOutcome::fail(name, format!("Σ c·ĉ != 2N − m at m={m}"));
        }
        // spectrum against the exact diagonal (S is diagonal in this basis)
        let mut agg: BTreeMap<i64, num_bigint::BigUint> = BTreeMap::new();
        for v in s.diag() {
            let e: i64 = v.to_integer().try_into().expect("small integer");
            *agg.entry(e).or_default() += 1u32;
        }
        let spec = s_spectrum(m).expect("even m");
        if spec != agg.into_iter().collect::<Vec<_>>() {
            return CheckOutcome::fail(name, format!("spectrum mismatch at m={m}"));
        }
        let (min_eig, mult) = &spec[0];
        if *min_eig != -(m as i64) || *mult != num_bigint::BigUint::one() {
            return CheckOutcome::fail(name, format!("lowest eigenvalue not simple −m at m={m}"));
        }
        // the −m eigenvector is the blade 1
        if s.diag()[0] != qi(-(m as i64)) {
            return CheckOutcome::fail(name, format!("blade 1 not lowest at m={m}"));
        }
    }
    CheckOutcome::pass(name, "S = (2N−m)σ, Σc·ĉ = 2N−m, binomial spectrum, −m simple; m ∈ {2,4,6,8}")
}

fn random_section(rng: &mut SplitMix64, m: u32) -> GaussianSection {
    let blades = 1u64 << m;
    let mut s = GaussianSection::zero(m);
    for _ in 0..4 {
        let mut alpha = vec![0u32; m as usize];
        let mut budget = 4u32;
        for a in alpha.iter_mut() {
            let e = rng.below(u64::from(budget.min(2)) + 1) as u32;
            *a = e;
            budget -= e;
        }
        let blade = rng.below(blades);
        let c = rng.rational(9, 4);
        s = s.add(&GaussianSection::monomial(m, alpha, blade, c));
    }
    s
}

/// The oscillator package: (D+V)β = 0, (D+V)² = −Δ + |Z|² + S on 100
/// random degree ≤ 4 sections for m ∈ {2,4}, and the kernel of the
/// conjugated oscillator is 1-dimensional for m ∈ {2,4}, d ≤ 2.
pub fn check_oscillator() -> CheckOutcome {
    let name = "oscillator";
    let mut rng = SplitMix64::new(0x05C1_11A7);
    for m in [2u32, 4] {
        let ops = OscillatorOps::new(m).expect("even m");
        if !ops.apply_dv(&GaussianSection::vacuum(m)).is_zero() {
            return CheckOutcome::fail(name, format!("(D+V)β != 0 at m={m}"));
        }
        for trial in 0..100 {
            let s = random_section(&mut rng, m);
            let lhs = ops.apply_dv(&ops.apply_dv(&s));
            let rhs = ops.apply_oscillator_rhs(&s);
            if lhs != rhs {
                return CheckOutcome::fail(
                    name,
                    format!("(D+V)² != −Δ+|Z|²+S at m={m}, trial {trial}"),
                );
            }
        }
        for d in 0..=2u32 {
            let kern = match oscillator_kernel(m, d) {
                Ok(k) => k,
                Err(e) => return CheckOutcome::fail(name, format!("kernel m={m} d={d}: {e}")),
            };
            if kern.dim != 1 {
                return CheckOutcome::fail(name, format!("kernel dim {} at m={m}, d={d}", kern.dim));
            }
            let b = &kern.basis[0];
            let ok = b.terms().all(|(a, blade, _)| a.iter().all(|&e| e == 0) && blade == 0);
            if !ok {
                return CheckOutcome::fail(name, format!("kernel not the vacuum at m={m}, d={d}"));
            }
        }
    }
    CheckOutcome::pass(name, "vacuum annihilated, 200 exact squares, kernels all 1-dim")
}

/// The hyperbolic series identities at D = 24 and spot-checked at D = 40,
/// and Â₁, Â₂ against both the closed forms and the Chern-root oracle.
pub fn check_series_identities() -> CheckOutcome {
    let name = "series-identities";
    for d in [24usize, 40] {
        match crate::charclass::identity_a45(d) {
            Ok(true) => {}
            other => return CheckOutcome::fail(name, format!("boundary-term identity at D={d}: {other:?}")),
        }
        match crate::charclass::identity_a8(d) {
            Ok(true) => {}
            other => return CheckOutcome::fail(name, format!("sinh identity at D={d}: {other:?}")),
        }
    }
    let polys = match a_hat_polys(3) {
        Ok(p) => p,
        Err(e) => return CheckOutcome::fail(name, format!("Â build: {e}")),
    };
    let a1_expected = GradedPoly::term(4, Monomial::p(1), q(-1, 24));
    if polys[1].rebound(4) != a1_expected {
        return CheckOutcome::fail(name, "Â₁ != −p₁/24".to_string());
    }
    let mut a2_expected = GradedPoly::term(8, Monomial::p(1).mul(&Monomial::p(1)), q(7, 5760));
    a2_expected = a2_expected.add(&GradedPoly::term(8, Monomial::p(2), q(-4, 5760)));
    if polys[2].rebound(8) != a2_expected {
        return CheckOutcome::fail(name, "Â₂ != (7p₁²−4p₂)/5760".to_string());
    }
    for i in 1..=3u32 {
        let oracle = chern_root_ahat_oracle(i);
        if polys[i as usize].rebound(4 * i) != oracle {
            return CheckOutcome::fail(name, format!("Â_{i} disagrees with Chern-root oracle"));
        }
    }
    CheckOutcome::pass(name, "identities exact at D = 24, 40; Â₁..Â₃ match the root oracle")
}

/// ≥50 synthetic datasets that satisfy the two tangent congruences exactly
/// must satisfy the sinh-form congruence; a perturbed control fails with
/// residue exactly 1/2.
pub fn check_congruence_implication() -> CheckOutcome {
    let name = "congruence-implication";
    let mut rng = SplitMix64::new(0xC06F_EE00);
    for trial in 0..50 {
        let k = if trial % 4 == 0 { 1 } else { 0 };
        let data = synthesize_congruence_dataset(&mut rng, k);
        for which in [CongruenceId::A6, CongruenceId::A7, CongruenceId::A8] {
            match check(&data, which) {
                Ok(rep) if rep.pass => {}
                Ok(rep) => {
                    return CheckOutcome::fail(
                        name,
                        format!("trial {trial} (k={k}): {which} fails with residue {}", rep.residue),
                    )
                }
                Err(e) => return CheckOutcome::fail(name, format!("trial {trial}: {e}")),
            }
        }
    }
    // negative control at k = 0: push the sinh pairing off by 1/2
    let mut control = synthesize_congruence_dataset(&mut rng, 0);
    let shifted = {
        let mut f = PairingFunctional::new(2);
        let old = control
            .pairing_b
            .values()
            .find(|(m, _)| **m == Monomial::e_power(1))
            .map(|(_, v)| v.clone())
            .expect("e value present");
        f.insert(Monomial::e_power(1), old - q(1, 2)).expect("degree ok");
        f
    };
    control.pairing_b = shifted;
    match check(&control, CongruenceId::A8) {
        Ok(rep) if !rep.pass && rep.residue == q(1, 2) => CheckOutcome::pass(
            name,
            "50 synthetic datasets imply the sinh congruence; control residue 1/2",
        ),
        Ok(rep) => CheckOutcome::fail(
            name,
            format!("control: pass={} residue={}", rep.pass, rep.residue),
        ),
        Err(e) => CheckOutcome::fail(name, format!("control: {e}")),
    }
}

/// 10⁵ random classes: every q output at level k has denominator dividing
/// 2^{4k+2}.
pub fn check_q_denominator_bound() -> CheckOutcome {
    let name = "q-denominator-bound";
    let mut rng = SplitMix64::new(0xDEAD_4B1D);
    for _ in 0..100_000 {
        let k = rng.below(4) as u32;
        let alpha = KOClassRP::new(k, rng.int_in(-1_000_000, 1_000_000), rng.int_in(-1_000_000, 1_000_000));
        let v = q_index(&alpha);
        let scaled = v.value() * Rational::from(BigInt::from(ko_order(k)));
        if !scaled.is_integer() {
            return CheckOutcome::fail(name, format!("denominator too large for {alpha:?}"));
        }
    }
    CheckOutcome::pass(name, "10^5 samples, all denominators divide 2^{4k+2}")
}

// ---------------------------------------------------------------------------
// Additional per-module property suites (beyond the nine headline checks)
// ---------------------------------------------------------------------------

/// Clifford algebra laws on random data: associativity (500 triples),
/// χ multiplicativity, twisted-adjoint orthogonality, word invertibility,
/// volume-element predicates, and the factorization dimension count.
pub fn check_clifford_algebra_laws() -> CheckOutcome {
    let name = "clifford-algebra-laws";
    let mut rng = SplitMix64::new(0xA55_0C1A);
    let random_element = |rng: &mut SplitMix64, n: u32| {
        let mut x = CliffordElement::zero(n);
        for _ in 0..4 {
            let mask = rng.below(1 << n);
            x = &x + &CliffordElement::blade(n, mask, rng.rational(8, 4));
        }
        x
    };
    for trial in 0..500 {
        let n = [3u32, 5, 8][trial % 3];
        let (x, y, z) = (
            random_element(&mut rng, n),
            random_element(&mut rng, n),
            random_element(&mut rng, n),
        );
        if &(&x * &y) * &z != &x * &(&y * &z) {
            return CheckOutcome::fail(name, format!("associativity fails at n = {n}"));
        }
    }
    let random_word = |rng: &mut SplitMix64, n: u32, len: usize| {
        let factors = (0..len)
            .map(|_| {
                let params: Vec<Rational> = (1..n).map(|_| rng.rational(5, 3)).collect();
                rational_unit_vector(&params)
            })
            .collect();
        PinWord::new(n, factors).expect("stereographic unit vectors")
    };
    for _ in 0..100 {
        let n = 4;
        let lu = rng.below(4) as usize;
        let lv = rng.below(4) as usize;
        let u = random_word(&mut rng, n, lu);
        let v = random_word(&mut rng, n, lv);
        if u.concat(&v).chi() != u.chi() * v.chi() {
            return CheckOutcome::fail(name, "χ not multiplicative".to_string());
        }
        if &u.as_element() * &u.inverse_element() != CliffordElement::one(n) {
            return CheckOutcome::fail(name, "word inverse fails".to_string());
        }
        let a: Vec<Rational> = (0..n).map(|_| rng.rational(6, 3)).collect();
        let b: Vec<Rational> = (0..n).map(|_| rng.rational(6, 3)).collect();
        let ga = u.twisted_adjoint(&a);
        let gb = u.twisted_adjoint(&b);
        if crate::clifford::inner_product(&ga, &gb) != crate::clifford::inner_product(&a, &b) {
            return CheckOutcome::fail(name, "twisted adjoint not orthogonal".to_string());
        }
    }
    for n in 1..=11u32 {
        let v = volume_element(n);
        if !v.centrality_holds() || !v.square_sign_holds() {
            return CheckOutcome::fail(name, format!("volume predicates fail at n = {n}"));
        }
    }
    for (k, l) in [(0u32, 1u32), (1, 1), (2, 1), (0, 2)] {
        if crate::clifford::factorization_dim_check(k, l) != Ok(true) {
            return CheckOutcome::fail(name, format!("factorization count fails at ({k},{l})"));
        }
    }
    CheckOutcome::pass(name, "500 associativity triples + word/adjoint/volume laws")
}

/// Equivariance of the Clifford action under 100 random (word, vector)
/// pairs in the n = 3 and n = 8 representations.
pub fn check_pin_equivariance() -> CheckOutcome {
    let name = "pin-equivariance";
    let mut rng = SplitMix64::new(0xE9_1A2B3C);
    for n in [3u32, 8] {
        let rep = build_rep(n).expect("n <= 12");
        for trial in 0..100 {
            let len = (rng.below(3) + (u64::from(trial % 2 == 0))) as usize;
            let factors = (0..len)
                .map(|_| {
                    let params: Vec<Rational> = (1..n).map(|_| rng.rational(4, 3)).collect();
                    rational_unit_vector(&params)
                })
                .collect();
            let w = PinWord::new(n, factors).expect("unit vectors");
            let e: Vec<Rational> = (0..n).map(|_| rng.rational(6, 3)).collect();
            match equivariance_check(&rep, &w, &e) {
                Ok(true) => {}
                other => {
                    return CheckOutcome::fail(
                        name,
                        format!("pair {trial} at n = {n}: {other:?}"),
                    )
                }
            }
        }
    }
    CheckOutcome::pass(name, "ω(e·s) = χ(ω)(γ(ω)e)(ω·s) for 200 random pairs, n ∈ {3,8}")
}

/// Exterior operator laws on random vectors: anticommutators of c and ĉ,
/// τ* = στ, and bijectivity of the symbol map.
pub fn check_exterior_operator_laws() -> CheckOutcome {
    let name = "exterior-operator-laws";
    let mut rng = SplitMix64::new(0xE87_0CAFE);
    for m in [2u32, 4, 6] {
        let ops = structure_ops(m).expect("even m");
        if ops.tau_star != ops.sigma.mul(&ops.tau) {
            return CheckOutcome::fail(name, format!("τ* != στ at m = {m}"));
        }
        let id = QMatrix::identity(1 << m);
        for _ in 0..20 {
            let e: Vec<Rational> = (0..m).map(|_| rng.rational(6, 3)).collect();
            let f: Vec<Rational> = (0..m).map(|_| rng.rational(6, 3)).collect();
            let ip: Rational = e.iter().zip(&f).map(|(a, b)| a * b).sum();
            let (ce, cf) = (clifford_op(m, &e).unwrap(), clifford_op(m, &f).unwrap());
            let (he, hf) = (hat_op(m, &e).unwrap(), hat_op(m, &f).unwrap());
            if ce.mul(&cf).add(&cf.mul(&ce)) != id.scale(&(qi(-2) * &ip)) {
                return CheckOutcome::fail(name, format!("c anticommutator fails at m = {m}"));
            }
            if he.mul(&hf).add(&hf.mul(&he)) != id.scale(&(qi(2) * &ip)) {
                return CheckOutcome::fail(name, format!("ĉ anticommutator fails at m = {m}"));
            }
            if !ce.mul(&hf).add(&hf.mul(&ce)).is_zero() {
                return CheckOutcome::fail(name, format!("c/ĉ cross term fails at m = {m}"));
            }
        }
    }
    let iso = clifford_exterior_iso(6).expect("m <= 10");
    if iso.rank() != 64 {
        return CheckOutcome::fail(name, "symbol map not bijective at m = 6".to_string());
    }
    CheckOutcome::pass(name, "anticommutators, τ* = στ, symbol map rank 64")
}

/// RP^q structure classification across the sweep range.
pub fn check_projective_structure() -> CheckOutcome {
    let name = "projective-structure";
    for q_ in 2..=10_000u32 {
        let kind = structure_kind(q_);
        let expected = match q_ % 4 {
            2 => StructureKind::PinMinusNonorientable,
            3 => StructureKind::Spin,
            _ => StructureKind::NotPinMinus,
        };
        if kind != expected {
            return CheckOutcome::fail(name, format!("classification off at q = {q_}"));
        }
    }
    CheckOutcome::pass(name, "spin/pin⁻/neither agrees with q mod 4 for q <= 10^4")
}

/// Series ring laws and parities on the hyperbolic family.
pub fn check_series_ring_laws() -> CheckOutcome {
    let name = "series-ring-laws";
    let mut rng = SplitMix64::new(0x5E81E5);
    for _ in 0..200 {
        let coeffs = |rng: &mut SplitMix64| {
            RationalSeries::from_coeffs((0..=8).map(|_| rng.rational(8, 4)).collect())
        };
        let (f, g, h) = (coeffs(&mut rng), coeffs(&mut rng), coeffs(&mut rng));
        if f.mul(&g).mul(&h) != f.mul(&g.mul(&h)) {
            return CheckOutcome::fail(name, "associativity fails".to_string());
        }
        if !f.coeff(0).is_zero() {
            let inv = f.invert().expect("unit");
            if f.mul(&inv) != RationalSeries::one(8) {
                return CheckOutcome::fail(name, "inverse fails".to_string());
            }
        }
    }
    let t = hyperbolic(HyperbolicFn::Tanh, &q(1, 4), 21).expect("order ok");
    let s = hyperbolic(HyperbolicFn::Sinh, &qi(1), 21).expect("order ok");
    let c = hyperbolic(HyperbolicFn::Cosh, &q(1, 2), 20).expect("order ok");
    if !t.is_odd_series() || !s.is_odd_series() || !c.is_even_series() {
        return CheckOutcome::fail(name, "parity fails".to_string());
    }
    for d in 4..=40 {
        if crate::charclass::identity_a45(d) != Ok(true) || crate::charclass::identity_a8(d) != Ok(true)
        {
            return CheckOutcome::fail(name, format!("identity fails at order {d}"));
        }
    }
    CheckOutcome::pass(name, "ring laws, parities, identities for all D <= 40")
}

/// Every check, headline and per-module, in a fixed order.
pub fn all_checks() -> Vec<CheckOutcome> {
    vec![
        check_ko_orders(),
        check_sw_obstruction_sweep(),
        check_q_homomorphism(),
        check_clifford_reps(),
        check_s_operator_identities(),
        check_oscillator(),
        check_series_identities(),
        check_congruence_implication(),
        check_q_denominator_bound(),
        check_clifford_algebra_laws(),
        check_pin_equivariance(),
        check_exterior_operator_laws(),
        check_projective_structure(),
        check_series_ring_laws(),
    ]
}

// ---------------------------------------------------------------------------
// Oracles and synthetic data
// ---------------------------------------------------------------------------

/// Multivariate polynomials over r formal roots: exponent vector → coeff.
type MPoly = BTreeMap<Vec<u32>, Rational>;

fn mpoly_mul(a: &MPoly, b: &MPoly, max_deg: u32) -> MPoly {
    let mut out = MPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if e.iter().sum::<u32>() > max_deg {
                continue;
            }
            let entry = out.entry(e).or_insert_with(Rational::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Elementary symmetric polynomial e_j in r variables.
fn elementary_symmetric(r: usize, j: usize) -> MPoly {
    let mut out = MPoly::new();
    let mut idx: Vec<usize> = (0..j).collect();
    if j == 0 {
        out.insert(vec![0; r], Rational::one());
        return out;
    }
    if j > r {
        return out;
    }
    loop {
        let mut e = vec![0u32; r];
        for &i in &idx {
            e[i] = 1;
        }
        out.insert(e, Rational::one());
        // next combination
        let mut pos = j;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] != pos + r - j {
                break;
            }
        }
        if pos == 0 && idx[0] == r - j {
            return out;
        }
        idx[pos] += 1;
        for t in pos + 1..j {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Brute-force Â_i over 2i formal roots: expand ∏ₜ Q̂(uₜ) to total degree i,
/// take the degree-i homogeneous symmetric part, and rewrite it in the
/// elementary symmetric basis by leading-term subtraction. Completely
/// independent of the multiplicative-sequence machinery.
pub fn chern_root_ahat_oracle(i: u32) -> GradedPoly {
    let r = (2 * i).max(1) as usize;
    let w = i as usize;
    // Q̂(u) coefficients: invert Σ u^j / (4^j (2j+1)!)
    let mut g = RationalSeries::zero(w);
    for j in 0..=w {
        let denom = qi(4).pow(j as i32) * crate::rat::factorial(2 * j as u32 + 1);
        g = g.add(&RationalSeries::monomial(w, j, Rational::one() / denom));
    }
    let q_hat = g.invert().expect("unit");
    // ∏ₜ Q̂(uₜ) truncated at total degree i
    let mut product = MPoly::new();
    product.insert(vec![0; r], Rational::one());
    for t in 0..r {
        let mut factor = MPoly::new();
        for j in 0..=w {
            let c = q_hat.coeff(j);
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u32; r];
            e[t] = j as u32;
            factor.insert(e, c);
        }
        product = mpoly_mul(&product, &factor, i);
    }
    // homogeneous degree-i part
    let mut homo: MPoly = product
        .into_iter()
        .filter(|(e, _)| e.iter().sum::<u32>() == i)
        .collect();
    // rewrite in elementary symmetric functions by leading-term subtraction
    let mut result = GradedPoly::zero(4 * i);
    while let Some((lead, coeff)) = homo
        .iter()
        .max_by(|(a, _), (b, _)| {
            let mut sa = a.to_vec();
            let mut sb = b.to_vec();
            sa.sort_unstable_by(|x, y| y.cmp(x));
            sb.sort_unstable_by(|x, y| y.cmp(x));
            sa.cmp(&sb)
        })
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        let mut lambda = lead.clone();
        lambda.sort_unstable_by(|x, y| y.cmp(x));
        // candidate ∏ e_j^{λ_j − λ_{j+1}}
        let mut candidate = MPoly::new();
        candidate.insert(vec![0; r], Rational::one());
        let mut p_mono = Monomial::unit();
        for j in 0..r {
            let this = lambda[j];
            let next = if j + 1 < r { lambda[j + 1] } else { 0 };
            for _ in 0..(this - next) {
                candidate = mpoly_mul(&candidate, &elementary_symmetric(r, j + 1), i);
                p_mono = p_mono.mul(&Monomial::p(j as u32 + 1));
            }
        }
        result = result.add(&GradedPoly::term(4 * i, p_mono, coeff.clone()));
        for (e, c) in &candidate {
            if e.iter().sum::<u32>() != i {
                continue;
            }
            let entry = homo.entry(e.clone()).or_insert_with(Rational::zero);
            *entry -= &coeff * c;
        }
        homo.retain(|_, v| !v.is_zero());
    }
    result
}

/// Build a synthetic congruence dataset at level k ∈ {0, 1} that satisfies
/// the two tangent congruences exactly (and therefore the sinh form):
/// random KO classes and B-pairing values, with the single pairing value on
/// e^{4k+1} solved so the sinh congruence holds, and the K side solved to
/// hit the first tangent congruence on the nose.
pub fn synthesize_congruence_dataset(rng: &mut SplitMix64, k: u32) -> CongruenceData {
    assert!(k <= 1, "synthetic datasets generated for k <= 1");
    let dim_b = 8 * k + 2;
    let dim_k = 8 * k + 4;
    let alpha_n = KOClassRP::new(k, rng.int_in(-40, 40), rng.int_in(0, 1 << (4 * k + 2)));
    let alpha_ro = KOClassRP::new(k, rng.int_in(-40, 40), rng.int_in(0, 1 << (4 * k + 2)));
    let alpha_tb = KOClassRP::new(k, rng.int_in(-40, 40), rng.int_in(0, 1 << (4 * k + 2)));
    let target = q_index(&alpha_n).value() - q_index(&alpha_ro).value() + qi(2 * rng.int_in(-2, 2));

    // B pairing: random values everywhere except e^{4k+1}, which is solved
    // so that <Â(TB)·sinh(e), [B]> = target.
    let mut pairing_b = PairingFunctional::new(dim_b);
    let special = Monomial::e_power(4 * k + 1);
    for m in monomials_of_degree(dim_b) {
        if m != special {
            pairing_b.insert(m, rng.rational(6, 3)).expect("top degree");
        }
    }
    let a_hat_b = a_hat_total(dim_b).expect("k <= 1");
    let sinh_e = {
        let s = hyperbolic(HyperbolicFn::Sinh, &qi(1), (dim_b / 2) as usize + 2).expect("order");
        GradedPoly::from_series(&s.truncate((dim_b / 2) as usize), dim_b)
    };
    let integrand = a_hat_b.mul(&sinh_e);
    let (partial, missing) = pairing_b.pair_defaulting_zero(&integrand);
    assert_eq!(missing, vec![special.clone()], "only the solved monomial may be missing");
    let special_coeff = integrand.coeff(&special);
    let value = (target - partial) / &special_coeff;
    pairing_b.insert(special.clone(), value).expect("top degree");

    // random ch over B (mechanical data; no geometric meaning required)
    let mut ch_b = GradedPoly::term(dim_b, Monomial::unit(), qi(rng.int_in(1, 8)));
    for m in monomials_of_degree(2).into_iter().chain(monomials_of_degree(4)) {
        if m.degree() <= dim_b && rng.below(2) == 0 {
            ch_b = ch_b.add(&GradedPoly::term(dim_b, m, rng.rational(4, 2)));
        }
    }

    // K side: ch_K = rank + x·e^{(4k+2)}; the K pairing gets random values
    // on the Â monomials and 1 on the top Euler power; x is solved so the
    // first tangent congruence holds exactly.
    let mut pairing_k = PairingFunctional::new(dim_k);
    let e_top = Monomial::e_power(dim_k / 2);
    for m in monomials_of_degree(dim_k) {
        if m == e_top {
            pairing_k.insert(m, qi(1)).expect("top degree");
        } else {
            pairing_k.insert(m, rng.rational(6, 3)).expect("top degree");
        }
    }
    let rank_k = qi(rng.int_in(1, 6));
    let a_hat_k = a_hat_total(dim_k).expect("k <= 1");
    // rhs of the first tangent congruence with these inputs
    let tanh_q = {
        let s = hyperbolic(HyperbolicFn::Tanh, &q(1, 4), (dim_b / 2) as usize + 2).expect("order");
        GradedPoly::from_series(&s.truncate((dim_b / 2) as usize), dim_b)
    };
    let ch_n = {
        let s = crate::charclass::ch_rank2_complexified((dim_b / 2) as usize + 2).expect("order");
        GradedPoly::from_series(&s.truncate((dim_b / 2) as usize), dim_b)
    };
    let correction = pairing_b
        .pair(&a_hat_b.mul(&tanh_q).mul(&ch_b.add(&ch_n)))
        .expect("full pairing");
    let alpha_tbn = alpha_tb.checked_add(&alpha_n).expect("same level");
    let r6 = q_index(&alpha_tbn).value() - q(1, 2) * correction + qi(2 * rng.int_in(-2, 2));
    // lhs = rank_K·<Â_K top, [K]> + x·<e_top> = r6  =>  solve x
    let base = pairing_k
        .pair(&a_hat_k.scale(&rank_k))
        .expect("full pairing");
    let x = r6 - base;

    let mut ch_k = GradedPoly::term(dim_k, Monomial::unit(), rank_k);
    ch_k = ch_k.add(&GradedPoly::term(dim_k, e_top, x));

    let mut classes = BTreeMap::new();
    classes.insert("N".to_string(), alpha_n.clone());
    classes.insert("Ro".to_string(), alpha_ro.clone());
    classes.insert("TBN".to_string(), alpha_tbn);
    classes.insert(
        "TBRo".to_string(),
        alpha_tb.checked_add(&alpha_ro).expect("same level"),
    );
    CongruenceData {
        k,
        pairing_b,
        pairing_k: Some(pairing_k),
        ch_k: Some(ch_k),
        ch_b: Some(ch_b),
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn oracle_matches_known_a1() {
        let oracle = chern_root_ahat_oracle(1);
        assert_eq!(oracle.coeff(&Monomial::p(1)), q(-1, 24));
        assert_eq!(oracle.terms().count(), 1);
    }

    #[test]
    fn synthetic_dataset_passes_all_three() {
        let mut rng = SplitMix64::new(42);
        for k in [0u32, 1] {
            let data = synthesize_congruence_dataset(&mut rng, k);
            for which in [CongruenceId::A6, CongruenceId::A7, CongruenceId::A8] {
                let rep = check(&data, which).unwrap();
                assert!(rep.pass, "k={k} {which}: {rep}");
            }
            // a9 is about honest 2-divisibility of the index difference and
            // holds for these classes only when 2(q(N)−q(Ro)) ∈ ℤ — not part
            // of the synthesis contract, so not asserted here.
        }
    }

    #[test]
    fn all_headline_checks_pass() {
        for c in [
            check_ko_orders(),
            check_clifford_reps(),
            check_series_identities(),
        ] {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
