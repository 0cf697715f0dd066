//! Exact computer algebra for pin⁻ index theory.
//!
//! Everything here is computed over exact rationals with arbitrary-precision
//! integers; there is no floating point on any evaluation path. The crate
//! covers five areas:
//!
//! * [`clifford`] — the real Clifford algebra c(ℝⁿ) with e² = −1, the pin⁻(n)
//!   group, its characters, explicit irreducible representation matrices, and
//!   the mod-8 classification of c(ℝⁿ).
//! * [`exterior`] — the operator calculus on Λ((ℝᵐ)*): creation/annihilation
//!   pairs c(e), ĉ(e), the grading operators σ, τ, τ*, N, the operator
//!   S = Σ c(eᵢ)c̃(eᵢ), and the harmonic-oscillator identities verified
//!   symbolically on Gaussian-weighted polynomial sections.
//! * [`projective`] — mod 2 cohomology of RP^q, Stiefel–Whitney classes, and
//!   the pin⁻/spin decision procedure.
//! * [`ko`] — reduced KO-group arithmetic on RP^{8k+2} and the dyadic index
//!   homomorphism q_{8k+2}.
//! * [`series`] / [`charclass`] / [`congruence`] — exact truncated power
//!   series, the Â multiplicative sequence, hyperbolic series identities, and
//!   Rokhlin-type congruence checkers over user-supplied pairing data.
//!
//! [`verify`] bundles every property suite into runnable checks; the `pindex`
//! CLI front end exposes each module and `verify-all`.

pub mod charclass;
pub mod clifford;
pub mod congruence;
pub mod exterior;
pub mod ko;
pub mod matrix;
pub mod projective;
pub mod rat;
pub mod series;
pub mod verify;

pub use matrix::QMatrix;
pub use rat::{q, qi, Rational};
