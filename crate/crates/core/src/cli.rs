//! Command-line front end.
//!
//! Coefficient payloads are printed as JSON with exact rationals written as
//! `"p/q"` strings; convergence tables are printed as CSV with header
//! `s,deviation,skipped`. Exit codes: 0 on success, 2 on usage errors, 3 on
//! domain or resonance errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::convergence::ConvergenceTable;
use crate::error::{Error, Result};
use crate::hojacobi::ho_expand;
use crate::jack::{jack_crosscheck, jack_from_ho};
use crate::limits_bc::{default_grid, theorem1_constant, theorem1_sweep, LimitRatio};
use crate::ortho1d::{
    limit_profile_hermite, limit_profile_monomial, limit_profile_ratio, monic_hermite,
    monic_jacobi, spherical_coefficient, verify_hermite_addition, JacobiParams, PolyCoeffs,
    DEFAULT_SEED,
};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::rootsystems::{Multiplicity, RootSystem, Weight};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "jacobi-bc",
    version,
    about = "Jacobi polynomials for BC_n and A_{n-1}, Jack polynomials, and limit checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monic Jacobi polynomial for the weight (1-x)^alpha (1+x)^beta.
    Jacobi1d {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        beta: Rational,
    },
    /// Monic Hermite polynomial for the weight exp(-x^2).
    Hermite {
        #[arg(long)]
        n: usize,
    },
    /// Orbit-sum expansion of a root-system Jacobi polynomial.
    Ho(HoArgs),
    /// Jack polynomial in the monomial basis.
    Jack {
        #[arg(long, value_parser = weight_arg)]
        lambda: Weight,
        #[arg(long)]
        nvars: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        k: Rational,
        /// Compare against the operator eigenvector with alpha = 1/k.
        #[arg(long)]
        crosscheck: bool,
    },
    /// Convergence tables for limit transitions.
    Limits {
        #[command(subcommand)]
        kind: LimitKind,
        #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
        format: Format,
    },
    /// Maximum residual of the Hermite addition formula at random points.
    Addition {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct HoArgs {
    #[arg(long, value_enum)]
    system: SystemArg,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_parser = weight_arg)]
    lambda: Weight,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    k1: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    k2: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    k3: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    k: Option<Rational>,
}

#[derive(Debug, Subcommand)]
enum LimitKind {
    /// p_n^(alpha,alpha) -> x^n.
    Monomial {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sweep: Vec<f64>,
    },
    /// alpha^(n/2) p_n^(alpha,alpha)(alpha^(-1/2) x) -> h_n(x).
    Hermite {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sweep: Vec<f64>,
    },
    /// p_n^(c s, s) -> (x + (c-1)/(c+1))^n.
    Ratio {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg)]
        c: Rational,
        #[arg(long, value_delimiter = ',', required = true)]
        sweep: Vec<f64>,
    },
    /// BC_n Jacobi polynomials -> Jack polynomials.
    Theorem1 {
        #[arg(long, value_parser = weight_arg)]
        lambda: Weight,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        k3: Rational,
        /// Limit of -k1/k2; a number at most 1, or -inf.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_delimiter = ',', required = true)]
        sweep: Vec<f64>,
        /// Points separated by ';', coordinates by ','. The first point is
        /// the reference.
        #[arg(long)]
        grid: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    Bc,
    A,
}

/// Serialization format for [`emit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn rational_arg(text: &str) -> std::result::Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn weight_arg(text: &str) -> std::result::Result<Weight, String> {
    text.split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Weight::new)
        .map_err(|e| format!("cannot parse '{text}' as a comma-separated weight: {e}"))
}

fn grid_arg(text: &str) -> Result<Vec<Vec<f64>>> {
    text.split(';')
        .map(|point| {
            point
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Domain(format!("cannot parse grid point '{point}'")))
                })
                .collect()
        })
        .collect()
}

/// Body of an [`OutputRecord`].
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Fields(BTreeMap<String, Value>),
    Table(ConvergenceTable),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub payload: Payload,
}

impl OutputRecord {
    fn new(command: &str, inputs: BTreeMap<String, Value>, payload: Payload) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            payload,
        }
    }
}

fn table_json(table: &ConvergenceTable) -> Value {
    let rows: Vec<Value> = table
        .rows()
        .iter()
        .map(|r| json!({"s": r.parameter, "deviation": r.deviation, "skipped": r.skipped()}))
        .collect();
    json!({"rows": rows, "estimated_order": table.estimated_order()})
}

/// Deterministic serialization: JSON with sorted keys, or CSV for table
/// payloads.
pub fn emit(record: &OutputRecord, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let payload = match &record.payload {
                Payload::Fields(fields) => json!(fields),
                Payload::Table(table) => table_json(table),
            };
            let value = json!({
                "schema_version": record.schema_version,
                "command": record.command,
                "inputs": record.inputs,
                "payload": payload,
            });
            let mut text = serde_json::to_string_pretty(&value)
                .map_err(|e| Error::Domain(format!("serialization failed: {e}")))?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => match &record.payload {
            Payload::Table(table) => Ok(table.to_csv()),
            Payload::Fields(_) => Err(Error::Domain(format!(
                "'{}' output has no CSV form",
                record.command
            ))),
        },
    }
}

fn rational_value(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

fn poly_value(poly: &PolyCoeffs) -> Value {
    Value::Array(poly.coeffs().iter().map(rational_value).collect())
}

fn coefficient_map<'a>(entries: impl Iterator<Item = (&'a Weight, &'a Rational)>) -> Value {
    let map: BTreeMap<String, Value> = entries
        .map(|(w, c)| (w.to_string(), rational_value(c)))
        .collect();
    json!(map)
}

fn fields<const N: usize>(entries: [(&str, Value); N]) -> BTreeMap<String, Value> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn float_list(values: &[f64]) -> Value {
    json!(values)
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Domain(e)
    }
}

fn execute(command: Command, err: &mut dyn Write) -> std::result::Result<String, Failure> {
    let (record, format) = match command {
        Command::Jacobi1d { n, alpha, beta } => {
            let params = JacobiParams::new(alpha.clone(), beta.clone())?;
            let poly = monic_jacobi(n, &params);
            let record = OutputRecord::new(
                "jacobi1d",
                fields([
                    ("n", json!(n)),
                    ("alpha", rational_value(&alpha)),
                    ("beta", rational_value(&beta)),
                ]),
                Payload::Fields(fields([
                    ("degree", json!(poly.degree())),
                    ("coefficients", poly_value(&poly)),
                ])),
            );
            (record, Format::Json)
        }
        Command::Hermite { n } => {
            let poly = monic_hermite(n);
            let record = OutputRecord::new(
                "hermite",
                fields([("n", json!(n))]),
                Payload::Fields(fields([
                    ("degree", json!(poly.degree())),
                    ("coefficients", poly_value(&poly)),
                ])),
            );
            (record, Format::Json)
        }
        Command::Ho(args) => (run_ho(args)?, Format::Json),
        Command::Jack {
            lambda,
            nvars,
            k,
            crosscheck,
        } => {
            let expansion = jack_from_ho(&lambda, nvars, &k)?;
            let mut payload =
                fields([("coefficients", coefficient_map(expansion.coeffs().iter()))]);
            if crosscheck {
                let equal = jack_crosscheck(&lambda, nvars, &k)?;
                let alpha = Rational::from_integer(1.into()) / &k;
                payload.insert("alpha".into(), rational_value(&alpha));
                payload.insert(
                    "crosscheck".into(),
                    json!(if equal { "equal" } else { "differ" }),
                );
            }
            let record = OutputRecord::new(
                "jack",
                fields([
                    ("lambda", json!(expansion.lambda().to_string())),
                    ("nvars", json!(nvars)),
                    ("k", rational_value(&k)),
                    ("crosscheck", json!(crosscheck)),
                ]),
                Payload::Fields(payload),
            );
            (record, Format::Json)
        }
        Command::Limits { kind, format } => (run_limits(kind, err)?, format),
        Command::Addition {
            l,
            vars,
            trials,
            seed,
        } => {
            let residual = verify_hermite_addition(l, vars, trials, seed)?;
            let spherical = spherical_coefficient(l, vars)?;
            let record = OutputRecord::new(
                "addition",
                fields([
                    ("l", json!(l)),
                    ("vars", json!(vars)),
                    ("trials", json!(trials)),
                    ("seed", json!(seed)),
                ]),
                Payload::Fields(fields([
                    ("max_residual", json!(residual)),
                    ("spherical_coefficient", poly_value(&spherical)),
                ])),
            );
            (record, Format::Json)
        }
    };
    Ok(emit(&record, format)?)
}

fn run_ho(args: HoArgs) -> std::result::Result<OutputRecord, Failure> {
    let zero = || Rational::from_integer(0.into());
    let (rs, kappa) = match args.system {
        SystemArg::Bc => {
            if args.k.is_some() {
                return Err(Failure::Usage("--k applies to --system a only".into()));
            }
            let kappa = Multiplicity::bc(
                args.k1.unwrap_or_else(zero),
                args.k2.unwrap_or_else(zero),
                args.k3.unwrap_or_else(zero),
            );
            (RootSystem::bc(args.rank)?, kappa)
        }
        SystemArg::A => {
            if args.k1.is_some() || args.k2.is_some() || args.k3.is_some() {
                return Err(Failure::Usage(
                    "--k1/--k2/--k3 apply to --system bc only".into(),
                ));
            }
            (
                RootSystem::a(args.rank)?,
                Multiplicity::a(args.k.unwrap_or_else(zero)),
            )
        }
    };
    let lambda = args.lambda.padded(args.rank)?;
    let expansion = ho_expand(&rs, &kappa, &lambda)?;
    let mut inputs = fields([
        ("system", json!(rs.to_string())),
        ("rank", json!(args.rank)),
        ("lambda", json!(lambda.to_string())),
    ]);
    match &kappa {
        Multiplicity::BC { k1, k2, k3 } => {
            inputs.insert("k1".into(), rational_value(k1));
            inputs.insert("k2".into(), rational_value(k2));
            inputs.insert("k3".into(), rational_value(k3));
        }
        Multiplicity::A { k } => {
            inputs.insert("k".into(), rational_value(k));
        }
    }
    Ok(OutputRecord::new(
        "ho",
        inputs,
        Payload::Fields(fields([
            ("coefficients", coefficient_map(expansion.coeffs().iter())),
            ("eigenvalue", rational_value(expansion.eigenvalue())),
        ])),
    ))
}

fn run_limits(kind: LimitKind, err: &mut dyn Write) -> std::result::Result<OutputRecord, Failure> {
    let record = match kind {
        LimitKind::Monomial { n, sweep } => OutputRecord::new(
            "limits monomial",
            fields([("n", json!(n)), ("sweep", float_list(&sweep))]),
            Payload::Table(limit_profile_monomial(n, &sweep)?),
        ),
        LimitKind::Hermite { n, sweep } => OutputRecord::new(
            "limits hermite",
            fields([("n", json!(n)), ("sweep", float_list(&sweep))]),
            Payload::Table(limit_profile_hermite(n, &sweep)?),
        ),
        LimitKind::Ratio { n, c, sweep } => OutputRecord::new(
            "limits ratio",
            fields([
                ("n", json!(n)),
                ("c", rational_value(&c)),
                ("sweep", float_list(&sweep)),
            ]),
            Payload::Table(limit_profile_ratio(n, &c, &sweep)?),
        ),
        LimitKind::Theorem1 {
            lambda,
            rank,
            k3,
            a,
            sweep,
            grid,
        } => {
            let ratio: LimitRatio = a.parse()?;
            let grid = match grid {
                Some(text) => grid_arg(&text)?,
                None => default_grid(rank),
            };
            let table = theorem1_sweep(&lambda, rank, &k3, ratio, &sweep, &grid)?;
            if let (Some(&s), Some(t_ref)) = (sweep.last(), grid.first()) {
                if let Ok(constant) = theorem1_constant(&lambda, rank, &k3, ratio, s, t_ref) {
                    let _ = writeln!(err, "# empirical constant at s = {s}: {constant}");
                }
            }
            OutputRecord::new(
                "limits theorem1",
                fields([
                    ("lambda", json!(lambda.to_string())),
                    ("rank", json!(rank)),
                    ("k3", rational_value(&k3)),
                    ("a", json!(ratio.to_string())),
                    ("sweep", float_list(&sweep)),
                ]),
                Payload::Table(table),
            )
        }
    };
    Ok(record)
}

/// Runs the tool on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_DOMAIN;
            }
            EXIT_OK
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "usage error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
