//! The `tripair` command line.
//!
//! Every report is one JSON document (or CSV for `census --format csv`) that
//! embeds the crate version and the resolved configuration. Exit status is
//! 0 on success, 1 when the answer is mathematically negative (not proper,
//! not quasi-definite, no partner found, a conjecture counterexample), and 2
//! on input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Field, Polynomial};
use crate::census::{is_realizable, run_census, DEFAULT_BUDGET};
use crate::functional::{
    constant_term_ratios, conjecture_sweep, hankel_report, orthopoly_sequence, quasi_definite_equivalence, FunctionalError,
};
use crate::io::{functional_from_json, load_json_arg, matrix_from_json, matrix_to_json, poly_from_json, poly_to_json, value_to_json};
use crate::realization::{check_proper, partner_search_report, realize, NotProper, RealizationOutcome, Verdict};
use crate::tridiagonal::{charpoly_chain, common_eigenvalue_count, s_invariants};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const THREADS_ENV: &str = "TRIPAIR_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug, Serialize)]
#[command(name = "tripair", version, about = "Proper polynomial pairs and tridiagonal realizations")]
pub struct Cli {
    /// Ground field: Q or GF(p). Defaults to the field named in the input JSON, else Q.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Master seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub output: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Serialize)]
pub struct PairArgs {
    /// Monic polynomial of degree n: a JSON file path or inline JSON.
    #[arg(short)]
    pub p: String,
    /// Monic polynomial of degree n-1.
    #[arg(short)]
    pub q: String,
}

#[derive(Args, Debug, Serialize)]
pub struct FunctionalArgs {
    /// Functional JSON (pair, points or derivative): path or inline.
    #[arg(long)]
    pub functional: String,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Decide whether (p, q) is a proper pair.
    CheckProper(PairArgs),
    /// Build the normalized irreducible tridiagonal matrix for (p, q).
    Realize(PairArgs),
    /// Characteristic polynomials of the trailing blocks of a matrix.
    Charpoly {
        /// Matrix JSON: path or inline.
        #[arg(long)]
        matrix: String,
    },
    /// Random search for a proper partner q of p.
    Partner {
        /// Polynomial JSON: path or inline.
        #[arg(short)]
        p: String,
        /// Number of trials.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Moments m_0, ..., m_{count-1}.
    Moments {
        #[command(flatten)]
        functional: FunctionalArgs,
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
    /// Hankel determinants det H_0..det H_{n-1} and det H̃_0..det H̃_{n-2}.
    Hankel {
        #[command(flatten)]
        functional: FunctionalArgs,
        #[arg(short, long)]
        n: usize,
    },
    /// Monic orthogonal polynomials P_0..P_n.
    Orthopoly {
        #[command(flatten)]
        functional: FunctionalArgs,
        #[arg(short, long)]
        n: usize,
    },
    /// Properness and quasi-definiteness of the pair functional, side by side.
    Equivalence(PairArgs),
    /// Realizability census over GF(p), or one polynomial with -p.
    Census {
        /// Matrix dimension.
        #[arg(short, long)]
        n: Option<usize>,
        /// Check a single polynomial instead of running the full census.
        #[arg(short)]
        p: Option<String>,
        /// Maximum number of matrices to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Closed-form Hankel determinants of point-mass functionals against direct computation.
    Conjecture {
        /// Number of point masses.
        #[arg(short, long)]
        n: usize,
        /// Random draws of nodes and weights.
        #[arg(long, default_value_t = 50)]
        trials: u64,
    },
}

/// An input problem, reported with exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub enum Report {
    Json(Value),
    Csv(String),
}

pub struct Outcome {
    pub report: Report,
    pub negative: bool,
}

impl Outcome {
    fn json(v: Value, negative: bool) -> Self {
        Outcome { report: Report::Json(v), negative }
    }
}

fn field_arg(cli: &Cli) -> Result<Option<Field>, InputError> {
    cli.field.as_deref().map(|s| s.parse().map_err(|e: crate::algebra::AlgebraError| InputError(format!("--field: {e}")))).transpose()
}

/// `--field` if given; otherwise ℚ unless the JSON names its own field.
fn fallback(v: &Value, field: Option<Field>) -> Option<Field> {
    field.or_else(|| v.get("field").is_none().then_some(Field::Q))
}

fn poly_arg(context: &str, arg: &str, field: Option<Field>) -> Result<Polynomial, InputError> {
    let v = load_json_arg(context, arg)?;
    Ok(poly_from_json(context, &v, fallback(&v, field))?)
}

fn pair_arg(args: &PairArgs, field: Option<Field>) -> Result<(Polynomial, Polynomial), InputError> {
    let p = poly_arg("p", &args.p, field)?;
    let q = poly_arg("q", &args.q, Some(field.unwrap_or(p.field())))?;
    Ok((p, q))
}

fn not_proper_json(np: &NotProper) -> Value {
    json!({
        "status": "not_proper",
        "step": np.step,
        "remainder_degree": np.remainder_degree,
        "expected_degree": np.expected_degree,
        "remainder": poly_to_json(&np.remainder),
    })
}

fn chain_json(polys: &[Polynomial]) -> Value {
    Value::Array(polys.iter().map(poly_to_json).collect())
}

fn dispatch(cli: &Cli) -> Result<Outcome, InputError> {
    let field = field_arg(cli)?;
    if cli.format == Format::Csv && !matches!(cli.command, Command::Census { n: Some(_), p: None, .. }) {
        return Err(InputError("--format csv is only available for a full census".into()));
    }
    Ok(match &cli.command {
        Command::CheckProper(args) => {
            let (p, q) = pair_arg(args, field)?;
            match check_proper(&p, &q)? {
                Verdict::Proper => Outcome::json(json!({"status": "proper"}), false),
                Verdict::NotProper(np) => Outcome::json(not_proper_json(&np), true),
            }
        }
        Command::Realize(args) => {
            let (p, q) = pair_arg(args, field)?;
            match realize(&p, &q)? {
                RealizationOutcome::Realized { matrix, chain } => Outcome::json(
                    json!({"status": "realized", "matrix": matrix_to_json(&matrix), "chain": chain_json(chain.polys())}),
                    false,
                ),
                RealizationOutcome::NotProper(np) => Outcome::json(not_proper_json(&np), true),
            }
        }
        Command::Charpoly { matrix } => {
            let v = load_json_arg("matrix", matrix)?;
            let m = matrix_from_json("matrix", &v, fallback(&v, field))?;
            let chain = charpoly_chain(&m);
            Outcome::json(
                json!({
                    "chain": chain_json(chain.polys()),
                    "irreducible": m.is_irreducible(),
                    "common_eigenvalues": common_eigenvalue_count(&m),
                    "s_invariants": Value::Array(s_invariants(&m).iter().map(value_to_json).collect()),
                }),
                false,
            )
        }
        Command::Partner { p, budget } => {
            let p = poly_arg("p", p, field)?;
            let found = partner_search_report(&p, *budget, cli.seed)?;
            match (found.partner, found.trial) {
                (Some(q), Some(trial)) => {
                    Outcome::json(json!({"status": "found", "q": poly_to_json(&q), "trial": trial}), false)
                }
                _ => Outcome::json(json!({"status": "not_found", "trials": budget}), true),
            }
        }
        Command::Moments { functional, count } => {
            let l = functional_from_json("functional", &load_json_arg("functional", &functional.functional)?, field)?;
            let m: Vec<Value> = l.moments(*count).iter().map(value_to_json).collect();
            Outcome::json(json!({"moments": m}), false)
        }
        Command::Hankel { functional, n } => {
            let l = functional_from_json("functional", &load_json_arg("functional", &functional.functional)?, field)?;
            let r = hankel_report(&l, *n);
            let js = |v: &[crate::algebra::FieldValue]| Value::Array(v.iter().map(value_to_json).collect());
            Outcome::json(
                json!({
                    "moments": js(&r.moments),
                    "hankel_dets": js(&r.hankel_dets),
                    "tilde_dets": js(&r.tilde_dets),
                    "constant_terms": constant_term_ratios(&r).iter().map(|c| c.as_ref().map_or(Value::Null, value_to_json)).collect::<Vec<_>>(),
                    "quasi_definite": r.quasi_definite,
                }),
                !r.quasi_definite,
            )
        }
        Command::Orthopoly { functional, n } => {
            let l = functional_from_json("functional", &load_json_arg("functional", &functional.functional)?, field)?;
            match orthopoly_sequence(&l, *n) {
                Ok(polys) => Outcome::json(json!({"status": "quasi_definite", "polys": chain_json(&polys)}), false),
                Err(FunctionalError::NotQuasiDefinite { level }) => {
                    Outcome::json(json!({"status": "not_quasi_definite", "level": level}), true)
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Equivalence(args) => {
            let (p, q) = pair_arg(args, field)?;
            let e = quasi_definite_equivalence(&p, &q)?;
            Outcome::json(
                json!({"proper": e.proper, "quasi_definite": e.quasi_definite, "agree": e.agrees()}),
                !(e.proper && e.quasi_definite),
            )
        }
        Command::Census { n, p, budget } => {
            let prime = |field: Field| {
                field.modulus().ok_or_else(|| InputError(format!("--field: census needs a prime field, got {field}")))
            };
            match (n, p) {
                (_, Some(p)) => {
                    let p = poly_arg("p", p, field)?;
                    prime(p.field())?;
                    match is_realizable(&p, *budget)? {
                        Some(w) => Outcome::json(json!({"realizable": true, "witness": matrix_to_json(&w)}), false),
                        None => Outcome::json(json!({"realizable": false}), true),
                    }
                }
                (Some(n), None) => {
                    let field = field.ok_or_else(|| InputError("--field: census needs --field GF(p)".into()))?;
                    let report = run_census(prime(field)?, *n, *budget)?;
                    if cli.format == Format::Csv {
                        let mut w = csv::Writer::from_writer(Vec::new());
                        w.write_record(["coeffs", "realizable", "count"])?;
                        for row in report.rows() {
                            let coeffs = row.coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
                            w.write_record([coeffs, row.realizable.to_string(), row.count.to_string()])?;
                        }
                        let bytes = w.into_inner().map_err(|e| InputError(e.to_string()))?;
                        Outcome { report: Report::Csv(String::from_utf8(bytes)?), negative: false }
                    } else {
                        let s = report.summary();
                        let rows: Vec<Value> = report.rows().into_iter().map(|r| serde_json::to_value(r).expect("plain data")).collect();
                        Outcome::json(json!({"summary": s, "rows": rows}), false)
                    }
                }
                (None, None) => return Err(InputError("census: give -n for a full census or -p for one polynomial".into())),
            }
        }
        Command::Conjecture { n, trials } => {
            let field = field.unwrap_or(Field::Q);
            if *n == 0 {
                return Err(InputError("-n: need at least one node".into()));
            }
            if let Some(p) = field.modulus() {
                if *n as u64 > p {
                    return Err(InputError(format!("-n: cannot place {n} distinct nodes in {field}")));
                }
            }
            let s = conjecture_sweep(field, *n, *trials, cli.seed);
            let failures: Vec<Value> = s
                .failures
                .iter()
                .map(|c| {
                    json!({
                        "trial": c.trial,
                        "k": c.k,
                        "nodes": c.nodes.iter().map(value_to_json).collect::<Vec<_>>(),
                        "weights": c.weights.iter().map(value_to_json).collect::<Vec<_>>(),
                        "determinant": value_to_json(&c.determinant),
                        "formula": value_to_json(&c.formula),
                    })
                })
                .collect();
            let negative = !failures.is_empty();
            Outcome::json(
                json!({"trials": s.trials, "checks": s.checks, "failures": failures.len(), "counterexamples": failures}),
                negative,
            )
        }
    })
}

fn threads_from_env() -> Result<usize, InputError> {
    match std::env::var(THREADS_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| InputError(format!("{THREADS_ENV}: expected a thread count, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

fn render(cli: &Cli, outcome: Outcome) -> String {
    match outcome.report {
        Report::Csv(s) => s,
        Report::Json(mut v) => {
            if let Value::Object(map) = &mut v {
                map.insert("version".into(), json!(VERSION));
                map.insert("config".into(), serde_json::to_value(cli).expect("plain data"));
            }
            let mut s = serde_json::to_string_pretty(&v).expect("plain data");
            s.push('\n');
            s
        }
    }
}

/// Parse `args`, run the command, write the report; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = threads_from_env().and_then(|threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        pool.install(|| dispatch(&cli))
    });
    let outcome = match result {
        Ok(o) => o,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let code = if outcome.negative { EXIT_NEGATIVE } else { EXIT_OK };
    let text = render(&cli, outcome);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(err, "error: --output {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}
