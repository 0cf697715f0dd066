//! Acceptance suite: the headline exact checks, one test per criterion,
//! each printing a pass/fail line and enforcing its time budget.
//!
//! Everything here is exact rational arithmetic — "tolerance" always means
//! structural equality; the budgets are wall-clock ceilings.

use std::time::{Duration, Instant};

use pindex::verify::{self, CheckOutcome};

fn run(check: impl FnOnce() -> CheckOutcome, budget: Duration) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    println!(
        "[{}] {} ({:.2?}) — {}",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.name,
        elapsed,
        outcome.detail,
    );
    assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
    assert!(
        elapsed <= budget,
        "{} exceeded its {:?} budget: {:?}",
        outcome.name,
        budget,
        elapsed
    );
}

#[test]
fn order_of_reduced_ko_groups() {
    run(verify::check_ko_orders, Duration::from_secs(1));
}

#[test]
fn sw_obstruction_sweep_matches_closed_form() {
    run(verify::check_sw_obstruction_sweep, Duration::from_secs(5));
}

#[test]
fn q_homomorphism_mod_2_with_carries() {
    run(verify::check_q_homomorphism, Duration::from_secs(5));
}

#[test]
fn clifford_representations_exact_through_n_11() {
    run(verify::check_clifford_reps, Duration::from_secs(30));
}

#[test]
fn s_operator_identities_and_spectrum() {
    run(verify::check_s_operator_identities, Duration::from_secs(30));
}

#[test]
fn oscillator_identities_and_kernel() {
    run(verify::check_oscillator, Duration::from_secs(60));
}

#[test]
fn hyperbolic_series_identities_and_ahat() {
    run(verify::check_series_identities, Duration::from_secs(10));
}

#[test]
fn congruence_implication_with_negative_control() {
    run(verify::check_congruence_implication, Duration::from_secs(10));
}

#[test]
fn q_denominator_bound_fuzz() {
    run(verify::check_q_denominator_bound, Duration::from_secs(5));
}
