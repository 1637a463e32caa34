//! Batch CLI: parse an input file, dispatch to a verifier or synthesizer,
//! emit a text or JSON certificate, exit deterministically.
//!
//! Exit codes: 0 accept/success, 1 reject, 2 undecided, 3 malformed input,
//! 4 hypothesis violation.

use clap::{Parser, Subcommand, ValueEnum};
use herglotz::error::Error;
use herglotz::gauss::GaussRat;
use herglotz::json;
use herglotz::rat::{parse_rat, rat, Rat};
use herglotz::verdict::{Outcome, Verdict};
use serde_json::{json as jsonv, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "herglotz", version, about = "Exact verification of rational Herglotz functions and de Branges matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for certificates.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Interval-refinement cap per sign decision (overrides HERGLOTZ_MAX_REFINE).
    #[arg(long, global = true)]
    max_refine: Option<u32>,
    /// Number of upper half-plane sample points for the criterion (i) grid.
    #[arg(long, global = true, default_value_t = 9)]
    samples: u32,
    /// Recorded in JSON certificates; reserved for sampled procedures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum, Debug)]
enum Criterion {
    Ii,
    Iii,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Decision procedures.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Factorizations with exact product identities.
    Factor {
        #[command(subcommand)]
        what: FactorCmd,
    },
    /// Decompose a divisor into 1-interlacing parts.
    Colour { file: PathBuf },
    /// Synthesis from interlacing data.
    Synth {
        #[command(subcommand)]
        what: SynthCmd,
    },
    /// Numeric cross-checking oracles.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Scalar rational Herglotz test.
    Scalar { file: PathBuf },
    /// Matrix Herglotz test via principal-minor interlacing.
    Matrix {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Criterion::All)]
        criterion: Criterion,
    },
    /// Matrix Hermite-Biehler membership of E (runs on [E#, E]).
    Hb { file: PathBuf },
    /// De Branges matrix membership of [E-, E+].
    Debranges { file: PathBuf },
}

#[derive(Subcommand)]
enum FactorCmd {
    /// Factor det Q of a verified Herglotz Q into scalar Herglotz factors.
    Det { file: PathBuf },
}

#[derive(Subcommand)]
enum SynthCmd {
    /// Build the Herglotz function with the given zeros, poles and scale.
    Scalar { file: PathBuf },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Argument-principle winding count over the circle with diameter [a,b].
    Winding {
        file: PathBuf,
        /// Interval as "a,b" with rational endpoints.
        #[arg(long, allow_hyphen_values = true)]
        interval: String,
        /// Trapezoid nodes per semicircular arc.
        #[arg(long, default_value_t = 2048)]
        steps: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli
        .max_refine
        .or_else(|| std::env::var("HERGLOTZ_MAX_REFINE").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(64);
    herglotz::set_refine_cap(cap);
    match run(&cli) {
        Ok((code, payload)) => {
            emit(&cli, &payload);
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify_error(&e))
        }
    }
}

fn classify_error(e: &Error) -> u8 {
    match e {
        Error::Malformed(_) => 3,
        Error::Undecided(_) => 2,
        _ => 4,
    }
}

fn outcome_code(o: Outcome) -> u8 {
    match o {
        Outcome::Accept => 0,
        Outcome::Reject => 1,
        Outcome::Undecided => 2,
    }
}

fn emit(cli: &Cli, payload: &Value) {
    match cli.output {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(payload).unwrap()),
        OutputFormat::Text => print_text(payload),
    }
}

fn print_text(v: &Value) {
    if let Some(outcome) = v.get("outcome").and_then(Value::as_str) {
        println!("outcome: {outcome}");
    }
    if let Some(checks) = v.get("checks").and_then(Value::as_array) {
        for c in checks {
            let cond = c.get("condition").and_then(Value::as_str).unwrap_or("?");
            let result = c.get("result").and_then(Value::as_str).unwrap_or("?");
            let mut line = format!("  [{result}] {cond}");
            if let Some(ix) = c.get("index_set") {
                line.push_str(&format!(" index_set={ix}"));
            }
            if let Some(w) = c.get("witness").and_then(Value::as_object) {
                for (k, val) in w {
                    line.push_str(&format!(" {k}={val}"));
                }
            }
            println!("{line}");
        }
    }
    for key in ["order", "parts", "sign", "factors", "function", "value", "criteria"] {
        if let Some(val) = v.get(key) {
            println!("{key}: {}", serde_json::to_string(val).unwrap());
        }
    }
}

fn read_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Malformed(format!("invalid JSON in {}: {e}", path.display())))
}

fn verdict_value(command: &str, v: &Verdict, seed: u64) -> Value {
    let mut obj = serde_json::to_value(v).unwrap();
    let map = obj.as_object_mut().unwrap();
    map.insert("command".into(), Value::String(command.into()));
    map.insert("seed".into(), jsonv!(seed));
    obj
}

fn run(cli: &Cli) -> Result<(u8, Value), Error> {
    match &cli.command {
        Command::Check { what } => match what {
            CheckCmd::Scalar { file } => {
                let f = json::parse_ratfn_value(&read_json(file)?)?;
                let v = herglotz::scalar::check_scalar_herglotz(&f);
                Ok((outcome_code(v.outcome), verdict_value("check scalar", &v, cli.seed)))
            }
            CheckCmd::Matrix { file, criterion } => {
                let q = json::parse_matrix_value(&read_json(file)?)?;
                check_matrix(&q, *criterion, cli)
            }
            CheckCmd::Hb { file } => {
                let e = match json::parse_debranges_value(&read_json(file)?)? {
                    json::DeBrangesFile::Single(e) => e,
                    json::DeBrangesFile::Pair(_) => {
                        return Err(Error::Malformed(
                            "hb mode expects {\"E\": matrix}".into(),
                        ))
                    }
                };
                let v = herglotz::debranges::check_hb_n(&e)?;
                Ok((outcome_code(v.outcome), verdict_value("check hb", &v, cli.seed)))
            }
            CheckCmd::Debranges { file } => {
                let input = match json::parse_debranges_value(&read_json(file)?)? {
                    json::DeBrangesFile::Pair(p) => p,
                    json::DeBrangesFile::Single(e) => herglotz::debranges::DeBrangesInput::new(
                        e.sharp_adjoint(),
                        e.clone(),
                    )?,
                };
                let v = herglotz::debranges::check_debranges(&input)?;
                Ok((outcome_code(v.outcome), verdict_value("check debranges", &v, cli.seed)))
            }
        },
        Command::Factor { what } => match what {
            FactorCmd::Det { file } => {
                let q = json::parse_matrix_value(&read_json(file)?)?;
                let factors = herglotz::matrix::factor_determinant(&q)?;
                let det = q.det()?;
                let payload = jsonv!({
                    "command": "factor det",
                    "outcome": "accept",
                    "det": json::ratfn_to_value(&det),
                    "factors": factors.iter().map(json::ratfn_to_value).collect::<Vec<_>>(),
                    "seed": cli.seed,
                });
                Ok((0, payload))
            }
        },
        Command::Colour { file } => {
            let d = json::parse_divisor_value(&read_json(file)?)?;
            let parts = d.colour_decompose()?;
            let payload = jsonv!({
                "command": "colour",
                "outcome": "accept",
                "order": d.min_interlacing_order(),
                "parts": parts.iter().map(json::divisor_to_value).collect::<Vec<_>>(),
                "seed": cli.seed,
            });
            Ok((0, payload))
        }
        Command::Synth { what } => match what {
            SynthCmd::Scalar { file } => {
                let data = json::parse_interlacing_value(&read_json(file)?)?;
                let f = herglotz::scalar::synth_from_interlacing(&data)?;
                let v = herglotz::scalar::check_scalar_herglotz(&f);
                let payload = jsonv!({
                    "command": "synth scalar",
                    "outcome": "accept",
                    "function": json::ratfn_to_value(&f),
                    "verified": v.is_accept(),
                    "seed": cli.seed,
                });
                Ok((0, payload))
            }
        },
        Command::Oracle { what } => match what {
            OracleCmd::Winding { file, interval, steps } => {
                let f = json::parse_ratfn_value(&read_json(file)?)?;
                let (a, b) = parse_interval(interval)?;
                let w = herglotz::scalar::winding_oracle(&f, &a, &b, *steps)?;
                let payload = jsonv!({
                    "command": "oracle winding",
                    "outcome": "accept",
                    "value": w,
                    "steps": steps,
                    "seed": cli.seed,
                });
                Ok((0, payload))
            }
        },
    }
}

fn parse_interval(s: &str) -> Result<(Rat, Rat), Error> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Malformed("interval must be \"a,b\"".into()))?;
    let a = parse_rat(a)?;
    let b = parse_rat(b)?;
    if a >= b {
        return Err(Error::Malformed("interval must satisfy a < b".into()));
    }
    Ok((a, b))
}

fn check_matrix(
    q: &herglotz::matfn::MatRatFn,
    criterion: Criterion,
    cli: &Cli,
) -> Result<(u8, Value), Error> {
    // hypotheses gate all criteria; a violation is its own exit code
    let hyp = herglotz::matrix::check_hypotheses(q);
    if !hyp.is_accept() {
        return Err(Error::HypothesesViolated(hyp.failed_conditions().join(", ")));
    }
    match criterion {
        Criterion::Ii => {
            let v = herglotz::matrix::verify_criterion_ii(q)?;
            Ok((outcome_code(v.outcome), verdict_value("check matrix --criterion ii", &v, cli.seed)))
        }
        Criterion::Iii => {
            let v = herglotz::matrix::verify_criterion_iii(q)?;
            Ok((outcome_code(v.outcome), verdict_value("check matrix --criterion iii", &v, cli.seed)))
        }
        Criterion::All => {
            let vii = herglotz::matrix::verify_criterion_ii(q)?;
            let viii = herglotz::matrix::verify_criterion_iii(q)?;
            // sample grid k*i/(samples+1), k = 1..samples, as Gaussian rationals
            let grid: Vec<GaussRat> = (1..=cli.samples)
                .map(|k| GaussRat::new(rat(0, 1), rat(k as i64, cli.samples as i64 + 1)))
                .collect();
            let vi = herglotz::matrix::sample_criterion_i(q, &grid)?;
            let agree = vii.outcome == viii.outcome
                && !(vi.is_reject() && vii.outcome == Outcome::Accept);
            let outcome = if !agree {
                // a disagreement would falsify the implementation, not the
                // characterization; surface as undecided
                Outcome::Undecided
            } else {
                vii.outcome
            };
            let payload = jsonv!({
                "command": "check matrix --criterion all",
                "outcome": match outcome {
                    Outcome::Accept => "accept",
                    Outcome::Reject => "reject",
                    Outcome::Undecided => "undecided",
                },
                "criteria": {
                    "ii": serde_json::to_value(&vii).unwrap(),
                    "iii": serde_json::to_value(&viii).unwrap(),
                    "i_sampled": serde_json::to_value(&vi).unwrap(),
                    "agreement": agree,
                },
                "seed": cli.seed,
            });
            Ok((outcome_code(outcome), payload))
        }
    }
}
