//! Rokhlin-type congruence checkers over user-supplied pairing data.
//!
//! Five congruences are assembled mechanically; no geometry is inferred.
//! Throughout, B is an (8k+2)-dimensional pin⁻ submanifold of an
//! (8k+4)-dimensional K, dual to w₂(TK), with normal 2-plane bundle N of
//! Euler symbol e, and every index input is a class in KO(RP^{8k+2})
//! supplied by the caller:
//!
//! * `a1` — ⟨Â(TK)·ch(E_ℂ),[K]⟩ ≡ ind(E) − ½⟨Â(TB)·tanh(e/4)·ch(i*E_ℂ),[B]⟩ (mod 2)
//! * `a6` — the E = TK case: ch over B becomes ch(T_ℂB) + ch(N_ℂ), with
//!   ch(N_ℂ) = 2cosh(e) filled in, and the index input is the class of TB⊕N
//! * `a7` — the variant with index input TB⊕ℝ⊕o(TB) and the extra term
//!   +⟨Â(TB)·(ch(N_ℂ) − 2cosh(e/2))/(2sinh(e/2)),[B]⟩
//! * `a8` — ind(N) − ind(ℝ⊕o(TB)) ≡ ⟨Â(TB)·sinh(e),[B]⟩ (mod 2)
//! * `a9` — 2·ind(N) ≡ 2·ind(ℝ⊕o(TB)) (mod ℤ)
//!
//! The mod 2 congruences mix dyadic index values with rational
//! characteristic numbers; both sides are computed in ℚ/2ℤ with canonical
//! representatives in [0, 2) (and ℚ/ℤ with [0, 1) for `a9`).
//!
//! # Data file format
//!
//! Plain text, `#` comments, a top-level `k = <int>` line, then sections:
//!
//! ```text
//! k = 0
//!
//! [pairing B]          # values of <.,[B]>, every monomial of degree 8k+2
//! e = 1/4
//!
//! [pairing K]          # values of <.,[K]>, every monomial of degree 8k+4
//! p1 = -24
//! e^2 = 0
//!
//! [index]              # KO(RP^{8k+2}) classes: name = rank, torsion
//! N = 0, 1
//! Ro = 2, 0
//!
//! [series ch_K]        # graded polynomial: monomial = coefficient
//! 1 = 4
//! p1 = 2
//!
//! [series ch_B]
//! 1 = 2
//! ```
//!
//! Rational literals are exact; floating point is rejected. Index names are
//! free-form; the checkers look for `E` (a1), `TBN` (a6), `TBRo` (a7), and
//! `N`, `Ro` (a8, a9).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::charclass::{
    a_hat_polys, ch_rank2_complexified, CharClassError, GradedPoly, Monomial, PairingFunctional,
};
use crate::ko::{q_index, KOClassRP};
use crate::rat::{parse_rational, q, qi, reduce_mod, ParseRationalError, Rational};
use crate::series::{hyperbolic, HyperbolicFn, RationalSeries, SeriesError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceId {
    A1,
    A6,
    A7,
    A8,
    A9,
}

impl CongruenceId {
    pub fn all() -> [CongruenceId; 5] {
        [Self::A1, Self::A6, Self::A7, Self::A8, Self::A9]
    }

    /// 2 for the mod-2ℤ congruences, 1 for the mod-ℤ one.
    pub fn modulus(self) -> u8 {
        match self {
            CongruenceId::A9 => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CongruenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CongruenceId::A1 => "a1",
            CongruenceId::A6 => "a6",
            CongruenceId::A7 => "a7",
            CongruenceId::A8 => "a8",
            CongruenceId::A9 => "a9",
        };
        write!(f, "{s}")
    }
}

impl FromStr for CongruenceId {
    type Err = CongruenceError;
    fn from_str(s: &str) -> Result<Self, CongruenceError> {
        match s.trim() {
            "a1" => Ok(CongruenceId::A1),
            "a6" => Ok(CongruenceId::A6),
            "a7" => Ok(CongruenceId::A7),
            "a8" => Ok(CongruenceId::A8),
            "a9" => Ok(CongruenceId::A9),
            other => Err(CongruenceError::UnknownCongruence(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("unknown congruence `{0}` (expected a1, a6, a7, a8 or a9)")]
    UnknownCongruence(String),
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("line {0}: {1}")]
    ParseRational(usize, ParseRationalError),
    #[error("missing `{0}` in the data file")]
    Missing(&'static str),
    #[error("missing index class `{0}` in [index]")]
    MissingClass(&'static str),
    #[error("series term {term} has degree {got} beyond the ring dimension {dim}")]
    SeriesDegree { term: String, got: u32, dim: u32 },
    #[error(transparent)]
    CharClass(#[from] CharClassError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Everything a congruence check consumes, already parsed and validated.
#[derive(Clone, Debug)]
pub struct CongruenceData {
    pub k: u32,
    pub pairing_b: PairingFunctional,
    pub pairing_k: Option<PairingFunctional>,
    pub ch_k: Option<GradedPoly>,
    pub ch_b: Option<GradedPoly>,
    pub classes: BTreeMap<String, KOClassRP>,
}

impl CongruenceData {
    pub fn dim_b(&self) -> u32 {
        8 * self.k + 2
    }

    pub fn dim_k(&self) -> u32 {
        8 * self.k + 4
    }

    pub fn empty(k: u32) -> Self {
        CongruenceData {
            k,
            pairing_b: PairingFunctional::new(8 * k + 2),
            pairing_k: Some(PairingFunctional::new(8 * k + 4)),
            ch_k: Some(GradedPoly::zero(8 * k + 4)),
            ch_b: Some(GradedPoly::zero(8 * k + 2)),
            classes: BTreeMap::new(),
        }
    }

    fn class(&self, name: &'static str) -> Result<&KOClassRP, CongruenceError> {
        self.classes
            .get(name)
            .ok_or(CongruenceError::MissingClass(name))
    }

    /// Serialize back to the data file format; `parse_data` round-trips it.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "k = {}", self.k);
        let _ = writeln!(out, "\n[pairing B]");
        for (m, v) in self.pairing_b.values() {
            let _ = writeln!(out, "{m} = {}", crate::rat::format_rational(v));
        }
        if let Some(pk) = &self.pairing_k {
            let _ = writeln!(out, "\n[pairing K]");
            for (m, v) in pk.values() {
                let _ = writeln!(out, "{m} = {}", crate::rat::format_rational(v));
            }
        }
        if !self.classes.is_empty() {
            let _ = writeln!(out, "\n[index]");
            for (name, c) in &self.classes {
                let _ = writeln!(out, "{name} = {}, {}", c.rank(), c.torsion());
            }
        }
        if let Some(chk) = &self.ch_k {
            let _ = writeln!(out, "\n[series ch_K]");
            for (m, v) in chk.terms() {
                let _ = writeln!(out, "{m} = {}", crate::rat::format_rational(v));
            }
        }
        if let Some(chb) = &self.ch_b {
            let _ = writeln!(out, "\n[series ch_B]");
            for (m, v) in chb.terms() {
                let _ = writeln!(out, "{m} = {}", crate::rat::format_rational(v));
            }
        }
        out
    }
}

/// Parse the data file format described in the module docs.
pub fn parse_data(text: &str) -> Result<CongruenceData, CongruenceError> {
    #[derive(PartialEq)]
    enum Section {
        Top,
        PairB,
        PairK,
        Index,
        ChK,
        ChB,
    }
    let mut k: Option<u32> = None;
    let mut section = Section::Top;
    // collected raw lines per section; degrees are validated once k is known
    let mut raw: Vec<(Section2, usize, String, String)> = Vec::new();
    // a section header alone declares its object (as zero/empty)
    let (mut seen_pair_k, mut seen_ch_k, mut seen_ch_b) = (false, false, false);
    #[derive(Clone, Copy, PartialEq)]
    enum Section2 {
        PairB,
        PairK,
        Index,
        ChK,
        ChB,
    }
    for (lineno, rawline) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match rawline.split_once('#') {
            Some((before, _)) => before.trim(),
            None => rawline.trim(),
        };
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| CongruenceError::Parse(lineno, "unterminated section".into()))?
                .trim();
            section = match name {
                "pairing B" => Section::PairB,
                "pairing K" => {
                    seen_pair_k = true;
                    Section::PairK
                }
                "index" => Section::Index,
                "series ch_K" => {
                    seen_ch_k = true;
                    Section::ChK
                }
                "series ch_B" => {
                    seen_ch_b = true;
                    Section::ChB
                }
                other => {
                    return Err(CongruenceError::Parse(
                        lineno,
                        format!("unknown section [{other}]"),
                    ))
                }
            };
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CongruenceError::Parse(lineno, format!("expected `key = value`, got `{line}`"))
        })?;
        let (key, value) = (key.trim().to_string(), value.trim().to_string());
        match section {
            Section::Top => {
                if key == "k" {
                    let parsed = value.parse::<u32>().map_err(|_| {
                        CongruenceError::Parse(lineno, format!("bad level: `{value}`"))
                    })?;
                    k = Some(parsed);
                } else {
                    return Err(CongruenceError::Parse(
                        lineno,
                        format!("unknown top-level key `{key}`"),
                    ));
                }
            }
            Section::PairB => raw.push((Section2::PairB, lineno, key, value)),
            Section::PairK => raw.push((Section2::PairK, lineno, key, value)),
            Section::Index => raw.push((Section2::Index, lineno, key, value)),
            Section::ChK => raw.push((Section2::ChK, lineno, key, value)),
            Section::ChB => raw.push((Section2::ChB, lineno, key, value)),
        }
    }
    let k = k.ok_or(CongruenceError::Missing("k"))?;
    let mut data = CongruenceData {
        k,
        pairing_b: PairingFunctional::new(8 * k + 2),
        pairing_k: seen_pair_k.then(|| PairingFunctional::new(8 * k + 4)),
        ch_k: seen_ch_k.then(|| GradedPoly::zero(8 * k + 4)),
        ch_b: seen_ch_b.then(|| GradedPoly::zero(8 * k + 2)),
        classes: BTreeMap::new(),
    };
    for (sec, lineno, key, value) in raw {
        match sec {
            Section2::PairB | Section2::PairK => {
                let m = Monomial::parse(&key)?;
                let v = parse_rational(&value)
                    .map_err(|e| CongruenceError::ParseRational(lineno, e))?;
                match sec {
                    Section2::PairB => data.pairing_b.insert(m, v)?,
                    _ => data
                        .pairing_k
                        .get_or_insert_with(|| PairingFunctional::new(8 * k + 4))
                        .insert(m, v)?,
                }
            }
            Section2::Index => {
                let (rank_s, n_s) = value.split_once(',').ok_or_else(|| {
                    CongruenceError::Parse(lineno, format!("expected `rank, torsion`: `{value}`"))
                })?;
                let rank: i64 = rank_s.trim().parse().map_err(|_| {
                    CongruenceError::Parse(lineno, format!("bad rank `{rank_s}`"))
                })?;
                let n: i64 = n_s.trim().parse().map_err(|_| {
                    CongruenceError::Parse(lineno, format!("bad torsion `{n_s}`"))
                })?;
                data.classes.insert(key, KOClassRP::new(k, rank, n));
            }
            Section2::ChK | Section2::ChB => {
                let m = Monomial::parse(&key)?;
                let v = parse_rational(&value)
                    .map_err(|e| CongruenceError::ParseRational(lineno, e))?;
                let dim = if sec == Section2::ChK { 8 * k + 4 } else { 8 * k + 2 };
                if m.degree() > dim {
                    return Err(CongruenceError::SeriesDegree {
                        term: m.to_string(),
                        got: m.degree(),
                        dim,
                    });
                }
                let poly = if sec == Section2::ChK {
                    data.ch_k.get_or_insert_with(|| GradedPoly::zero(dim))
                } else {
                    data.ch_b.get_or_insert_with(|| GradedPoly::zero(dim))
                };
                *poly = poly.add(&GradedPoly::term(dim, m, v));
            }
        }
    }
    Ok(data)
}

/// Outcome of a congruence check: both sides reduced into [0, modulus),
/// the residue of their difference, and the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub which: CongruenceId,
    pub lhs: Rational,
    pub rhs: Rational,
    pub residue: Rational,
    pub modulus: u8,
    pub pass: bool,
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: lhs = {} , rhs = {} (mod {}): residue {} => {}",
            self.which,
            crate::rat::format_rational(&self.lhs),
            crate::rat::format_rational(&self.rhs),
            self.modulus,
            crate::rat::format_rational(&self.residue),
            if self.pass { "pass" } else { "FAIL" },
        )
    }
}

fn report(which: CongruenceId, lhs: Rational, rhs: Rational) -> CongruenceReport {
    let modulus = qi(which.modulus() as i64);
    let lhs = reduce_mod(&lhs, &modulus);
    let rhs = reduce_mod(&rhs, &modulus);
    let residue = reduce_mod(&(&lhs - &rhs), &modulus);
    CongruenceReport {
        which,
        lhs,
        rhs,
        residue: residue.clone(),
        modulus: which.modulus(),
        pass: residue.is_zero(),
    }
}

/// Â-total 1 + Â₁ + Â₂ + … truncated at the given degree bound.
pub fn a_hat_total(bound: u32) -> Result<GradedPoly, CharClassError> {
    let polys = a_hat_polys(bound / 4)?;
    let mut total = GradedPoly::zero(bound);
    for p in &polys {
        total = total.add(&p.rebound(bound));
    }
    Ok(total)
}

/// Series in e embedded into the B-ring at its dimension bound.
fn embed_series(
    f: impl FnOnce(usize) -> Result<RationalSeries, SeriesError>,
    bound: u32,
) -> Result<GradedPoly, CongruenceError> {
    let order = (bound / 2) as usize + 4;
    let s = f(order)?;
    Ok(GradedPoly::from_series(&s.truncate((bound / 2) as usize), bound))
}

/// Run one congruence check against the supplied data. The assembly is
/// purely mechanical: Â polynomials, hyperbolic series and ch(N_ℂ) are
/// computed; pairings and KO classes come from the data.
pub fn check(data: &CongruenceData, which: CongruenceId) -> Result<CongruenceReport, CongruenceError> {
    let dim_b = data.dim_b();
    let a_hat_b = a_hat_total(dim_b)?;
    match which {
        CongruenceId::A1 | CongruenceId::A6 | CongruenceId::A7 => {
            let pairing_k = data.pairing_k.as_ref().ok_or(CongruenceError::Missing("[pairing K]"))?;
            let ch_k = data.ch_k.as_ref().ok_or(CongruenceError::Missing("[series ch_K]"))?;
            let ch_b = data.ch_b.as_ref().ok_or(CongruenceError::Missing("[series ch_B]"))?;
            let a_hat_k = a_hat_total(data.dim_k())?;
            let lhs = pairing_k.pair(&a_hat_k.mul(ch_k))?;

            let tanh_quarter = embed_series(
                |o| hyperbolic(HyperbolicFn::Tanh, &q(1, 4), o),
                dim_b,
            )?;
            let (index_name, ch_b_total) = match which {
                CongruenceId::A1 => ("E", ch_b.clone()),
                CongruenceId::A6 => {
                    // i*TK = TB ⊕ N: add ch(N_C) = 2cosh(e)
                    let ch_n = embed_series(ch_rank2_complexified, dim_b)?;
                    ("TBN", ch_b.add(&ch_n))
                }
                CongruenceId::A7 => ("TBRo", ch_b.clone()),
                _ => unreachable!(),
            };
            let alpha = data.class(index_name)?;
            let ind = q_index(alpha);
            let correction = data
                .pairing_b
                .pair(&a_hat_b.mul(&tanh_quarter).mul(&ch_b_total))?;
            let mut rhs = ind.value() - q(1, 2) * correction;
            if which == CongruenceId::A7 {
                // + <Â(TB)·(ch(N_C) − 2cosh(e/2)) / (2sinh(e/2)), [B]>
                let extra = embed_series(
                    |o| {
                        let ch_n = ch_rank2_complexified(o)?;
                        let cosh_half = hyperbolic(HyperbolicFn::Cosh, &q(1, 2), o)?.scale(&qi(2));
                        let sinh_half = hyperbolic(HyperbolicFn::Sinh, &q(1, 2), o)?.scale(&qi(2));
                        ch_n.sub(&cosh_half).div_factor_e(&sinh_half)
                    },
                    dim_b,
                )?;
                rhs += data.pairing_b.pair(&a_hat_b.mul(&extra))?;
            }
            Ok(report(which, lhs, rhs))
        }
        CongruenceId::A8 => {
            let n = q_index(data.class("N")?);
            let ro = q_index(data.class("Ro")?);
            let lhs = n.value() - ro.value();
            let sinh_e = embed_series(|o| hyperbolic(HyperbolicFn::Sinh, &qi(1), o), dim_b)?;
            let rhs = data.pairing_b.pair(&a_hat_b.mul(&sinh_e))?;
            Ok(report(which, lhs, rhs))
        }
        CongruenceId::A9 => {
            let n = q_index(data.class("N")?);
            let ro = q_index(data.class("Ro")?);
            let lhs = qi(2) * n.value();
            let rhs = qi(2) * ro.value();
            Ok(report(which, lhs, rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_data_passes_a1() {
        let mut data = CongruenceData::empty(0);
        data.classes.insert("E".into(), KOClassRP::zero(0));
        let rep = check(&data, CongruenceId::A1).unwrap();
        assert!(rep.pass);
        assert!(rep.lhs.is_zero() && rep.rhs.is_zero());
    }

    #[test]
    fn a9_is_class_arithmetic_only() {
        let mut data = CongruenceData::empty(0);
        // q(N) = 1/4 + 3/2 = 7/4; q(Ro) = 2/4 = 1/2; 2·7/4 = 7/2 ≡ 1/2 (mod 1),
        // 2·1/2 = 1 ≡ 0: residue 1/2 => fail
        data.classes.insert("N".into(), KOClassRP::new(0, 1, 3));
        data.classes.insert("Ro".into(), KOClassRP::new(0, 2, 0));
        let rep = check(&data, CongruenceId::A9).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.residue, q(1, 2));
        // equal classes trivially pass
        data.classes.insert("Ro".into(), KOClassRP::new(0, 1, 3));
        assert!(check(&data, CongruenceId::A9).unwrap().pass);
    }

    #[test]
    fn a8_negative_control_reports_residue() {
        // arrange a8 to hold, then perturb the pairing by 1/2
        let mut data = CongruenceData::empty(0);
        data.classes.insert("N".into(), KOClassRP::new(0, 0, 1)); // q = 1/2
        data.classes.insert("Ro".into(), KOClassRP::zero(0)); // q = 0
        // <Â sinh(e), [B]> at k=0 is just the value on `e`
        data.pairing_b.insert(Monomial::e_power(1), q(1, 2)).unwrap();
        let rep = check(&data, CongruenceId::A8).unwrap();
        assert!(rep.pass, "{rep}");
        let mut bad = data.clone();
        bad.pairing_b = PairingFunctional::new(2);
        bad.pairing_b.insert(Monomial::e_power(1), qi(0)).unwrap();
        let rep = check(&bad, CongruenceId::A8).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.residue, q(1, 2));
    }

    #[test]
    fn missing_inputs_are_reported() {
        let data = CongruenceData::empty(0);
        assert_eq!(
            check(&data, CongruenceId::A8),
            Err(CongruenceError::MissingClass("N"))
        );
        let mut no_k = CongruenceData::empty(0);
        no_k.pairing_k = None;
        no_k.classes.insert("E".into(), KOClassRP::zero(0));
        assert_eq!(
            check(&no_k, CongruenceId::A1),
            Err(CongruenceError::Missing("[pairing K]"))
        );
    }

    #[test]
    fn parse_and_roundtrip() {
        let text = "\
# sample
k = 0

[pairing B]
e = 1/4

[pairing K]
p1 = -24   # one value per top monomial
e^2 = 3

[index]
N = 0, 1
Ro = 2, 0

[series ch_K]
1 = 4
p1 = 1/2

[series ch_B]
1 = 2
e = 5
";
        let data = parse_data(text).unwrap();
        assert_eq!(data.k, 0);
        assert_eq!(data.classes.len(), 2);
        let rendered = data.to_text();
        let reparsed = parse_data(&rendered).unwrap();
        assert_eq!(reparsed.to_text(), rendered);
    }

    #[test]
    fn empty_sections_mean_zero_data() {
        let text = "k = 0\n[pairing B]\n[pairing K]\n[index]\nE = 0, 0\n[series ch_K]\n[series ch_B]\n";
        let data = parse_data(text).unwrap();
        assert!(data.pairing_k.is_some());
        assert!(data.ch_k.as_ref().unwrap().is_zero());
        let rep = check(&data, CongruenceId::A1).unwrap();
        assert!(rep.pass);
        assert!(rep.lhs.is_zero() && rep.rhs.is_zero());
    }

    #[test]
    fn parse_rejects_floats_and_bad_sections() {
        assert!(matches!(
            parse_data("k = 0\n[pairing B]\ne = 1.5\n"),
            Err(CongruenceError::ParseRational(..))
        ));
        assert!(matches!(
            parse_data("k = 0\n[nope]\n"),
            Err(CongruenceError::Parse(..))
        ));
        assert!(matches!(parse_data(""), Err(CongruenceError::Missing("k"))));
        // wrong-degree pairing monomial: inconsistent dimension tag
        assert!(parse_data("k = 0\n[pairing B]\ne^2 = 1\n").is_err());
        // series beyond the ring dimension
        assert!(matches!(
            parse_data("k = 0\n[series ch_B]\ne^4 = 1\n"),
            Err(CongruenceError::SeriesDegree { .. })
        ));
    }
}
