//! `pindex` — exact computations around pin⁻ index theory on the command
//! line. Every value is an exact rational rendered as `p/q`;`--json` emits
//! the same payload as machine-readable JSON.
//!
//! Exit codes: 0 success/pass, 1 verification failure, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pindex::charclass::{a_hat_polys, identity_a45, identity_a8};
use pindex::clifford::{build_rep, classify};
use pindex::congruence::{check, parse_data, CongruenceId};
use pindex::exterior::gaussian::oscillator_kernel;
use pindex::exterior::s_spectrum;
use pindex::ko::{ko_order, q_index, KOClassRP};
use pindex::projective::{pin_obstruction, structure_kind, sw_total};
use pindex::rat::format_rational;
use pindex::verify;

#[derive(Parser)]
#[command(
    name = "pindex",
    version,
    about = "Exact computer algebra for pin⁻ index theory",
    propagate_version = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Real Clifford algebras c(ℝⁿ) and their representations.
    Clifford {
        #[command(subcommand)]
        cmd: CliffordCmd,
    },
    /// Operators on the exterior algebra Λ((ℝᵐ)*).
    Exterior {
        #[command(subcommand)]
        cmd: ExteriorCmd,
    },
    /// Mod 2 cohomology of real projective spaces.
    Rp {
        #[command(subcommand)]
        cmd: RpCmd,
    },
    /// KO(RP^{8k+2}) classes and the dyadic index.
    Ko {
        #[command(subcommand)]
        cmd: KoCmd,
    },
    /// Exact series and characteristic-class polynomials.
    Series {
        #[command(subcommand)]
        cmd: SeriesCmd,
    },
    /// Congruence checks over pairing data files.
    Congruence {
        #[command(subcommand)]
        cmd: CongruenceCmd,
    },
    /// Run every verification suite and report one line per check.
    VerifyAll,
}

#[derive(Subcommand)]
enum CliffordCmd {
    /// Isomorphism type of c(ℝⁿ) and its irreducible module dimensions.
    Classify {
        #[arg(long)]
        n: u32,
    },
    /// Build the representation matrices for c(ℝⁿ) and check the Clifford
    /// relations and volume-element convention exactly.
    RepCheck {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum ExteriorCmd {
    /// Spectrum of S = Σ c(eᵢ)c̃(eᵢ): eigenvalues with multiplicities.
    SSpectrum {
        #[arg(long)]
        m: u32,
    },
    /// Kernel of the conjugated oscillator −Δ + 2Z·∂ + m + S on polynomial
    /// sections with every exponent ≤ deg.
    Oscillator {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        deg: u32,
    },
}

#[derive(Subcommand)]
enum RpCmd {
    /// Total Stiefel–Whitney class (1+a)^{q+1} of RP^q.
    Sw {
        #[arg(long)]
        q: u32,
    },
    /// Spin/pin⁻ classification of RP^q.
    Kind {
        #[arg(long)]
        q: u32,
    },
}

#[derive(Subcommand)]
enum KoCmd {
    /// q_{8k+2}(m + n(1−γ)) = m/2^{4k+2} + n/2^{4k+1} mod 2.
    Index {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Order of the reduced KO group of RP^{8k+2}.
    Order {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityName {
    /// The boundary-term identity summing to −(1/2)tanh(e/4).
    A45,
    /// The identity collapsing the tangent congruences to Â·sinh(e).
    A8,
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Verify a hyperbolic series identity exactly through the given order.
    Identity {
        #[arg(long, value_enum)]
        which: IdentityName,
        #[arg(long)]
        order: usize,
    },
    /// The Â multiplicative-sequence polynomials Â₀ … Â_{max_i}.
    Ahat {
        #[arg(long, value_name = "I")]
        max_i: u32,
    },
}

#[derive(Subcommand)]
enum CongruenceCmd {
    /// Assemble and check one congruence against a pairing data file.
    Check {
        #[arg(long)]
        which: String,
        #[arg(long)]
        data: std::path::PathBuf,
    },
}

/// A report is an ordered list of exact fields plus an optional verdict;
/// identical inputs always produce byte-identical output.
struct Report {
    command: String,
    fields: Vec<(&'static str, Value)>,
    pass: Option<bool>,
}

impl Report {
    fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            fields: Vec::new(),
            pass: None,
        }
    }

    fn field(mut self, key: &'static str, value: Value) -> Self {
        self.fields.push((key, value));
        self
    }

    fn verdict(mut self, pass: bool) -> Self {
        self.pass = Some(pass);
        self
    }

    fn emit(self, as_json: bool) -> ExitCode {
        if as_json {
            let mut obj = serde_json::Map::new();
            obj.insert("command".into(), Value::String(self.command));
            for (k, v) in self.fields {
                obj.insert(k.into(), v);
            }
            if let Some(p) = self.pass {
                obj.insert("pass".into(), Value::Bool(p));
            }
            println!("{}", serde_json::to_string_pretty(&Value::Object(obj)).expect("valid json"));
        } else {
            println!("{}", self.command);
            for (k, v) in self.fields {
                println!("  {k}: {}", render(&v));
            }
            if let Some(p) = self.pass {
                println!("  result: {}", if p { "pass" } else { "FAIL" });
            }
        }
        match self.pass {
            Some(false) => ExitCode::from(1),
            _ => ExitCode::SUCCESS,
        }
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(render).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match cli.command {
        Command::Clifford { cmd } => clifford_cmd(cmd, json),
        Command::Exterior { cmd } => exterior_cmd(cmd, json),
        Command::Rp { cmd } => rp_cmd(cmd, json),
        Command::Ko { cmd } => ko_cmd(cmd, json),
        Command::Series { cmd } => series_cmd(cmd, json),
        Command::Congruence { cmd } => congruence_cmd(cmd, json),
        Command::VerifyAll => verify_all(json),
    }
}

fn clifford_cmd(cmd: CliffordCmd, json: bool) -> ExitCode {
    match cmd {
        CliffordCmd::Classify { n } => {
            if n == 0 || n > 100 {
                return usage_error("--n must be in 1..=100");
            }
            let t = classify(n);
            Report::new(format!("clifford classify --n {n}"))
                .field("algebra", json!(t.to_string()))
                .field("summands", json!(t.summands))
                .field("matrix_size", json!(t.matrix_size))
                .field("irrep_real_dim", json!(t.irrep_real_dim()))
                .field("total_real_dim", json!(t.total_real_dim().to_string()))
                .emit(json)
        }
        CliffordCmd::RepCheck { n } => {
            let rep = match build_rep(n) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let relations = rep.relations_ok();
            let convention = rep.splus_convention_ok();
            let size_ok = rep.size() as u64 == classify(n).irrep_real_dim();
            Report::new(format!("clifford rep-check --n {n}"))
                .field("module_dim", json!(rep.size()))
                .field("relations_exact", json!(relations))
                .field("volume_acts_as_plus_id", json!(n % 4 != 3 || convention))
                .field("size_matches_classification", json!(size_ok))
                .verdict(relations && convention && size_ok)
                .emit(json)
        }
    }
}

fn exterior_cmd(cmd: ExteriorCmd, json: bool) -> ExitCode {
    match cmd {
        ExteriorCmd::SSpectrum { m } => {
            if m > 64 {
                return usage_error("--m must be at most 64");
            }
            let spec = match s_spectrum(m) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let rows: Vec<Value> = spec
                .iter()
                .map(|(eig, mult)| json!({ "eigenvalue": eig, "multiplicity": mult.to_string() }))
                .collect();
            Report::new(format!("exterior s-spectrum --m {m}"))
                .field("lowest", json!(spec[0].0))
                .field("lowest_multiplicity", json!(spec[0].1.to_string()))
                .field("spectrum", Value::Array(rows))
                .emit(json)
        }
        ExteriorCmd::Oscillator { m, deg } => {
            let kern = match oscillator_kernel(m, deg) {
                Ok(k) => k,
                Err(e) => return usage_error(e),
            };
            let basis: Vec<Value> = kern
                .basis
                .iter()
                .map(|s| {
                    let terms: Vec<String> = s
                        .terms()
                        .map(|(alpha, blade, c)| {
                            format!("{} * Z^{:?} (x) blade {:#b}", format_rational(c), alpha, blade)
                        })
                        .collect();
                    json!(terms.join(" + "))
                })
                .collect();
            Report::new(format!("exterior oscillator --m {m} --deg {deg}"))
                .field("kernel_dim", json!(kern.dim))
                .field("basis", Value::Array(basis))
                .emit(json)
        }
    }
}

fn rp_cmd(cmd: RpCmd, json: bool) -> ExitCode {
    match cmd {
        RpCmd::Sw { q } => {
            if q == 0 || q > 100_000 {
                return usage_error("--q must be in 1..=100000");
            }
            let w = sw_total(q);
            Report::new(format!("rp sw --q {q}"))
                .field("total_class", json!(w.to_string()))
                .field("w1", json!(u8::from(w.coeff(1))))
                .field("w2", json!(u8::from(w.coeff(2))))
                .emit(json)
        }
        RpCmd::Kind { q } => {
            if !(2..=100_000).contains(&q) {
                return usage_error("--q must be in 2..=100000");
            }
            Report::new(format!("rp kind --q {q}"))
                .field("kind", json!(structure_kind(q).to_string()))
                .field("obstruction", json!(pin_obstruction(q)))
                .emit(json)
        }
    }
}

fn ko_cmd(cmd: KoCmd, json: bool) -> ExitCode {
    match cmd {
        KoCmd::Index { k, m, n } => {
            if k > 14 {
                return usage_error("--k must be at most 14");
            }
            let alpha = KOClassRP::new(k, m, n);
            let value = q_index(&alpha);
            Report::new(format!("ko index --k {k} --m {m} --n {n}"))
                .field("class", json!(alpha.to_string()))
                .field("q_index", json!(value.to_string()))
                .field("ind_t", json!(pindex::ko::ind_t(&alpha).to_string()))
                .field("eta_prediction", json!(pindex::ko::eta_prediction(&alpha).to_string()))
                .emit(json)
        }
        KoCmd::Order { k } => {
            if k > 100 {
                return usage_error("--k must be at most 100");
            }
            Report::new(format!("ko order --k {k}"))
                .field("order", json!(ko_order(k).to_string()))
                .emit(json)
        }
    }
}

fn series_cmd(cmd: SeriesCmd, json: bool) -> ExitCode {
    match cmd {
        SeriesCmd::Identity { which, order } => {
            let (name, result) = match which {
                IdentityName::A45 => ("a45", identity_a45(order)),
                IdentityName::A8 => ("a8", identity_a8(order)),
            };
            match result {
                Ok(holds) => Report::new(format!("series identity --which {name} --order {order}"))
                    .field("holds_exactly", json!(holds))
                    .verdict(holds)
                    .emit(json),
                Err(e) => usage_error(e),
            }
        }
        SeriesCmd::Ahat { max_i } => {
            let polys = match a_hat_polys(max_i) {
                Ok(p) => p,
                Err(e) => return usage_error(e),
            };
            let rows: Vec<Value> = polys
                .iter()
                .enumerate()
                .map(|(i, p)| json!({ "i": i, "poly": p.to_string() }))
                .collect();
            Report::new(format!("series ahat --max-i {max_i}"))
                .field("polys", Value::Array(rows))
                .emit(json)
        }
    }
}

fn congruence_cmd(cmd: CongruenceCmd, json: bool) -> ExitCode {
    match cmd {
        CongruenceCmd::Check { which, data } => {
            let which: CongruenceId = match which.parse() {
                Ok(w) => w,
                Err(e) => return usage_error(e),
            };
            let text = match std::fs::read_to_string(&data) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("{}: {e}", data.display())),
            };
            let parsed = match parse_data(&text) {
                Ok(d) => d,
                Err(e) => return usage_error(e),
            };
            let report = match check(&parsed, which) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            Report::new(format!("congruence check --which {which} --data {}", data.display()))
                .field("lhs", json!(format_rational(&report.lhs)))
                .field("rhs", json!(format_rational(&report.rhs)))
                .field("residue", json!(format_rational(&report.residue)))
                .field("modulus", json!(report.modulus))
                .verdict(report.pass)
                .emit(json)
        }
    }
}

fn verify_all(json: bool) -> ExitCode {
    let start = std::time::Instant::now();
    let checks = verify::all_checks();
    let all_pass = checks.iter().all(|c| c.passed);
    if json {
        let rows: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.passed, "detail": c.detail }))
            .collect();
        let payload = json!({
            "command": "verify-all",
            "checks": rows,
            "pass": all_pass,
            "elapsed_ms": start.elapsed().as_millis() as u64,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("valid json"));
    } else {
        for c in &checks {
            println!(
                "[{}] {} — {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        println!(
            "{} of {} checks passed in {:.2?}",
            checks.iter().filter(|c| c.passed).count(),
            checks.len(),
            start.elapsed()
        );
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
