//! The `tensordim` command line: parse presentation files, run one
//! computation, print a text or JSON report.
//!
//! Exit codes: 0 success, 1 formula and oracle disagree, 2 bad input,
//! 3 unsupported configuration, 4 inconsistent witness.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use tensordim::spectra::{parse_witness, EffectiveSpectrum, FibreRing};
use tensordim::theorems::{
    boolean_dim, cross_check, dim_tensor, dim_tensor_zero_dim, random_cross_check, CheckOptions,
    CrossCheckReport, TensorDimReport,
};
use tensordim::{
    dim_at, effective_dim, effective_spectrum, fibre_at, fibre_dim, parse_algebra_with_order,
    seidenberg_bounds, verify_af_at_prime, AlgebraPresentation, BaseRing, DimensionValue, Error,
    MonomialOrder, SpecPoint,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_WITNESS: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tensordim", version, about = "Krull dimension of fibre rings and tensor products")]
struct Cli {
    /// Emit a single JSON object on standard output.
    #[arg(long, global = true)]
    json: bool,

    /// Monomial order used for Groebner bases (lex or grevlex).
    #[arg(long, global = true, default_value = "grevlex")]
    order: MonomialOrder,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PointArgs {
    /// A prime of the base ring.
    #[arg(long, conflicts_with = "generic")]
    at: Option<u64>,

    /// The zero ideal of Z or Q.
    #[arg(long)]
    generic: bool,
}

impl PointArgs {
    fn point(&self) -> Result<Option<SpecPoint>, Error> {
        match (self.at, self.generic) {
            (Some(p), _) => p.to_string().parse().map(Some),
            (None, true) => Ok(Some(SpecPoint::Generic)),
            (None, false) => Ok(None),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Krull dimension, at a point or (when the effective dimension is 0) overall.
    Dim {
        file: PathBuf,
        #[command(flatten)]
        point: PointArgs,
    },
    /// The fibre ring k(p) ⊗ A.
    Fibre {
        file: PathBuf,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Primes of the base with a nonzero fibre.
    Effspec { file: PathBuf },
    /// Dimension of A ⊗ B.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        /// Fail with exit code 1 unless formula and oracle agree.
        #[arg(long)]
        check: bool,
    },
    /// Lower and upper bounds for dim A from fibre and effective dimensions.
    Bounds { file: PathBuf },
    /// Check ht(P) + t.d.(A/P) = t.d.(A_P) for a prime witness.
    Af {
        file: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Compare formula and oracle on a pair, or on a seeded random batch.
    Check {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::Dim { .. } => "dim",
            Command::Fibre { .. } => "fibre",
            Command::Effspec { .. } => "effspec",
            Command::Tensor { .. } => "tensor",
            Command::Bounds { .. } => "bounds",
            Command::Af { .. } => "af",
            Command::Check { .. } => "check",
        }
    }
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Unsupported(_)
            | Error::UnsupportedBase(_)
            | Error::Factorization(_)
            | Error::NotZeroDimensional(_)
            | Error::NotATriplet(_) => EXIT_UNSUPPORTED,
            Error::InconsistentWitness(_) => EXIT_WITNESS,
            Error::Inconsistency(_) => EXIT_DISAGREE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

/// What a command produced: the JSON payload, its text rendering, and the
/// exit code.
struct Outcome {
    result: Value,
    details: Option<Value>,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Outcome {
            result,
            details: None,
            text,
            code: EXIT_OK,
        }
    }
}

struct Style {
    color: bool,
}

impl Style {
    fn verdict(&self, good: bool) -> String {
        let (word, code) = if good { ("agree", "32") } else { ("DISAGREE", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn load(path: &Path, order: MonomialOrder) -> Result<AlgebraPresentation, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_failure(format!("cannot read {}: {e}", path.display())))?;
    parse_algebra_with_order(&text, order)
        .map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn describe_spectrum(s: &EffectiveSpectrum) -> String {
    let list = |pts: &std::collections::BTreeSet<u64>| {
        pts.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
    };
    if s.is_empty() {
        return "empty (A is the zero ring)".into();
    }
    let mut parts = Vec::new();
    if s.includes_generic {
        parts.push("generic".to_string());
    }
    if s.cofinite {
        if s.closed_points.is_empty() {
            parts.push("every prime".into());
        } else {
            parts.push(format!("every prime except {}", list(&s.closed_points)));
        }
    } else if !s.closed_points.is_empty() {
        parts.push(format!("primes {}", list(&s.closed_points)));
    }
    parts.join(" + ")
}

fn describe_fibre(f: &FibreRing) -> Value {
    let factors: Vec<Value> = f
        .factors()
        .iter()
        .map(|fr| {
            json!({
                "field": fr.field().to_string(),
                "vars": fr.vars(),
                "relations": fr.relations().iter().map(|r| r.render(fr.vars())).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(factors)
}

fn tensor_text(r: &TensorDimReport, style: &Style) -> String {
    let mut s = format!("path: {}\n", to_value(&r.path).as_str().unwrap_or_default());
    for p in &r.points {
        s.push_str(&format!(
            "  at {}: dim A = {}, dim B = {}, formula = {}, oracle = {}\n",
            p.point, p.dim_a, p.dim_b, p.formula, p.oracle
        ));
    }
    s.push_str(&format!(
        "dim(A ⊗ B) = {} (oracle {}, {})",
        r.formula_dim,
        r.oracle_dim,
        style.verdict(r.agreement)
    ));
    s
}

fn boolean_atom_count(a: &AlgebraPresentation) -> Option<usize> {
    let k = a.factors().len();
    (a.base() == BaseRing::Integers && *a == AlgebraPresentation::boolean_atoms(k).ok()?).then_some(k)
}

/// Pick the most specific formula whose hypotheses hold for `A`.
fn tensor_report(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<TensorDimReport, Error> {
    if let Some(k) = boolean_atom_count(a) {
        if b.base() == BaseRing::Integers && !dim_at(b, SpecPoint::Closed(2))?.is_empty() {
            return boolean_dim(k, b);
        }
    }
    if fibre_dim(a)? == DimensionValue::Finite(0) {
        return dim_tensor_zero_dim(a, b);
    }
    dim_tensor(a, b)
}

fn check_text(r: &CrossCheckReport, style: &Style) -> String {
    let mut s = String::new();
    if let Some(seed) = r.seed {
        s.push_str(&format!("seed {seed}\n"));
    }
    for (i, rep) in r.reports.iter().enumerate() {
        s.push_str(&format!(
            "  #{i}: formula {} oracle {} ({})\n",
            rep.formula_dim,
            rep.oracle_dim,
            style.verdict(rep.agreement)
        ));
    }
    s.push_str(&format!("{} pairs, {} failures", r.reports.len(), r.failures));
    s
}

fn execute(cli: &Cli, style: &Style) -> Result<Outcome, Failure> {
    let order = cli.order;
    match &cli.command {
        Command::Dim { file, point } => {
            let a = load(file, order)?;
            if let Some(pt) = point.point()? {
                let d = dim_at(&a, pt)?;
                let label = match pt {
                    SpecPoint::Generic => "dim at generic point".to_string(),
                    SpecPoint::Closed(p) => format!("dim at {p}"),
                };
                return Ok(Outcome::ok(to_value(&d), format!("{label}: {d}")));
            }
            let e = effective_dim(&a)?;
            if e > DimensionValue::Finite(0) {
                return Err(Failure {
                    code: EXIT_UNSUPPORTED,
                    message: format!(
                        "the absolute dimension equals the fibre dimension only when the \
                         effective dimension is 0, and here it is {e}; pass --at P or \
                         --generic, or use `bounds`"
                    ),
                });
            }
            let d = fibre_dim(&a)?;
            Ok(Outcome::ok(to_value(&d), format!("dim: {d}")))
        }
        Command::Fibre { file, point } => {
            let a = load(file, order)?;
            let pt = point
                .point()?
                .ok_or_else(|| input_failure("fibre needs --at P or --generic".into()))?;
            let f = fibre_at(&a, pt)?;
            let zero = f.is_zero()?;
            let dim = f.krull_dim()?;
            let factors = describe_fibre(&f);
            let mut text = format!("fibre at {pt} ({}):\n", if zero { "zero ring" } else { "nonzero" });
            for fr in factors.as_array().unwrap() {
                text.push_str(&format!(
                    "  {}[{}] / ({})\n",
                    fr["field"].as_str().unwrap(),
                    fr["vars"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect::<Vec<_>>().join(", "),
                    fr["relations"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect::<Vec<_>>().join(", "),
                ));
            }
            text.push_str(&format!("dimension: {dim}"));
            let result = json!({
                "point": pt,
                "effective": !zero,
                "dim": dim,
                "factors": factors,
            });
            Ok(Outcome::ok(result, text))
        }
        Command::Effspec { file } => {
            let a = load(file, order)?;
            let s = effective_spectrum(&a)?;
            let e = effective_dim(&a)?;
            let maximal = s.maximal_points();
            let text = format!(
                "effective spectrum: {}\neffective dimension: {e}",
                describe_spectrum(&s)
            );
            Ok(Outcome {
                result: to_value(&s),
                details: Some(json!({"effective_dim": e, "maximal": maximal})),
                text,
                code: EXIT_OK,
            })
        }
        Command::Tensor { a, b, check } => {
            let (x, y) = (load(a, order)?, load(b, order)?);
            let r = tensor_report(&x, &y)?;
            let code = if *check && !r.agreement { EXIT_DISAGREE } else { EXIT_OK };
            let text = tensor_text(&r, style);
            Ok(Outcome {
                result: to_value(&r),
                details: None,
                text,
                code,
            })
        }
        Command::Bounds { file } => {
            let a = load(file, order)?;
            let b = seidenberg_bounds(&a)?;
            let mut text = format!("{} <= dim <= {}", b.lower, b.upper);
            if let Some(d) = b.dim_if_known {
                text.push_str(&format!("\ndim: {d}"));
            }
            if let Some(g) = b.going_down_lower {
                text.push_str(&format!("\ngoing-down lower bound: {g}"));
            }
            Ok(Outcome::ok(to_value(&b), text))
        }
        Command::Af { file, witness } => {
            let a = load(file, order)?;
            let text = fs::read_to_string(witness)
                .map_err(|e| input_failure(format!("cannot read {}: {e}", witness.display())))?;
            let w = parse_witness(&text, &a)?;
            let r = verify_af_at_prime(&a, w.point, w.factor, &w.prime, &w.components)?;
            let text = format!(
                "at {}: ht(P) = {}, t.d.(A/P) = {}, t.d.(A_P) = {}: {}",
                w.point,
                r.height,
                r.td_quotient,
                r.td_local,
                if r.holds { "altitude formula holds" } else { "altitude formula FAILS" }
            );
            Ok(Outcome {
                result: to_value(&r),
                details: None,
                text,
                code: if r.holds { EXIT_OK } else { EXIT_DISAGREE },
            })
        }
        Command::Check { files, seed, count } => {
            let r = match files.as_slice() {
                [] => random_cross_check(&CheckOptions {
                    seed: *seed,
                    count: *count,
                    ..CheckOptions::default()
                })?,
                [a, b] => cross_check(&load(a, order)?, &load(b, order)?)?,
                other => {
                    return Err(input_failure(format!(
                        "check takes two presentation files (or none for a random batch), got {}",
                        other.len()
                    )))
                }
            };
            let code = if r.failures > 0 { EXIT_DISAGREE } else { EXIT_OK };
            let text = check_text(&r, style);
            Ok(Outcome {
                result: to_value(&r),
                details: None,
                text,
                code,
            })
        }
    }
}

fn inputs(cli: &Cli) -> Value {
    let path = |p: &PathBuf| Value::String(p.display().to_string());
    let point = |p: &PointArgs| match (p.at, p.generic) {
        (Some(p), _) => json!(p),
        (None, true) => json!("generic"),
        _ => Value::Null,
    };
    let order = cli.order.name();
    match &cli.command {
        Command::Dim { file, point: p } | Command::Fibre { file, point: p } => {
            json!({"files": [path(file)], "point": point(p), "order": order})
        }
        Command::Effspec { file } | Command::Bounds { file } => {
            json!({"files": [path(file)], "order": order})
        }
        Command::Tensor { a, b, check } => {
            json!({"files": [path(a), path(b)], "check": check, "order": order})
        }
        Command::Af { file, witness } => {
            json!({"files": [path(file)], "witness": path(witness), "order": order})
        }
        Command::Check { files, seed, count } => {
            let mut v = json!({"files": files.iter().map(path).collect::<Vec<_>>(), "order": order});
            if files.is_empty() {
                v["seed"] = json!(seed);
                v["count"] = json!(count);
            }
            v
        }
    }
}

/// Run with plain output.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    run_styled(argv, out, err, false)
}

/// Run; `color` enables ANSI colours in text mode.
pub fn run_styled<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E, color: bool) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    let style = Style { color: color && !cli.json };
    let verb = cli.command.verb();
    match execute(&cli, &style) {
        Ok(o) => {
            if cli.json {
                let mut doc = json!({"verb": verb, "inputs": inputs(&cli), "result": o.result});
                if let Some(d) = o.details {
                    doc["details"] = d;
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                let _ = writeln!(out, "{}", o.text);
            }
            if o.code == EXIT_DISAGREE {
                let _ = writeln!(err, "formula and oracle disagree");
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            if cli.json {
                let doc = json!({
                    "verb": verb,
                    "inputs": inputs(&cli),
                    "error": {"code": f.code, "message": f.message},
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            }
            f.code
        }
    }
}
