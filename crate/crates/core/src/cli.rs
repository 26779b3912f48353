//! Command-line front end. Parsing lives in [`RunConfig`]; [`run`] produces
//! the full output text so every command is deterministic and testable
//! without spawning a process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::appell::AppellTable;
use crate::arith::{fmt_rational, parse_rational, to_f64, Rational};
use crate::axial::check_odd_dimension;
use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::fueter::{alpha_monomial, fueter_sce_monomial};
use crate::series::hypergeometric::{closed_form_eval, SumControl, DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE};
use crate::series::{appell_extension, compare_extensions, ClassParameters, SeriesSpec, DEFAULT_TRUNCATION};
use crate::verify::{self, SuiteReport};

/// Environment variable overriding the hypergeometric term cap.
pub const LMAX_ENV: &str = "CLIFFEX_LMAX";

#[derive(Debug, Parser)]
#[command(name = "cliffex", version, about = "Appell polynomials and Fueter-Sce extensions in Cl(0,n)")]
pub struct RunConfig {
    /// Output format; `compare` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P_k^n and the table of c_n^0..c_n^k.
    Appell {
        #[arg(long, value_parser = parse_dimension)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print the Fueter-Sce transform of z^k and its normalization constant.
    Fueter {
        #[arg(long, value_parser = parse_dimension)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Skip the normalization constant.
        #[arg(long, conflicts_with = "normalized")]
        raw: bool,
        /// Scale so the value at x = 1 is one (default).
        #[arg(long)]
        normalized: bool,
    },
    /// Run a verification suite; exits nonzero when any check fails.
    Verify(VerifyArgs),
    /// Compare Fueter-Sce and Appell extension coefficients of a series.
    Compare {
        #[arg(long, value_parser = parse_dimension)]
        n: usize,
        #[command(flatten)]
        source: SeriesSource,
        #[arg(long = "K", default_value_t = DEFAULT_TRUNCATION)]
        k_max: usize,
        /// Fueter-Sce constant to use when the recurrence gives none.
        #[arg(long, value_parser = parse_rational_arg)]
        alpha: Option<Rational>,
    },
    /// Evaluate a truncated Appell extension at a paravector, or the closed
    /// form of a recurrence-class series at a real point.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Vanishing,
    Monogenic,
    AppellProperty,
    Recurrence,
    ClosedForm,
    Beta,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Dimension; omitted means 3, 5 and 7.
    #[arg(long, value_parser = parse_dimension)]
    pub n: Option<usize>,
    /// Largest degree or index checked.
    #[arg(long = "kmax", visible_alias = "K")]
    pub k_max: Option<usize>,
    #[arg(long, default_value = "exp")]
    pub series: String,
    #[arg(long, value_parser = parse_rational_arg)]
    pub gamma: Option<Rational>,
    #[arg(long, value_delimiter = ',', value_parser = parse_rational_arg)]
    pub init: Vec<Rational>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Negate c_n^k before checking; used to confirm failures are detected.
    #[arg(long = "flip-c", hide = true)]
    pub flip_c: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SeriesSource {
    /// Built-in series: exp, sinh, cosh, geometric, z^m.
    #[arg(long, conflicts_with = "coeffs")]
    pub series: Option<String>,
    /// File with one rational coefficient per line.
    #[arg(long)]
    pub coeffs: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_parser = parse_dimension)]
    pub n: usize,
    #[command(flatten)]
    pub source: SeriesSource,
    #[arg(long = "closed-form", conflicts_with_all = ["series", "coeffs"])]
    pub closed_form: bool,
    #[arg(long, value_parser = parse_rational_arg, requires = "closed_form")]
    pub gamma: Option<Rational>,
    #[arg(long, value_delimiter = ',', value_parser = parse_rational_arg)]
    pub init: Vec<Rational>,
    /// Real evaluation point for --closed-form.
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub z: Option<Rational>,
    /// Paravector components x0,x1,...,xn.
    #[arg(long, value_delimiter = ',', value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub point: Vec<Rational>,
    #[arg(long = "K", default_value_t = DEFAULT_TRUNCATION)]
    pub k_max: usize,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

fn parse_dimension(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("invalid dimension {s:?}"))?;
    check_odd_dimension(n).map_err(|_| "n must be odd (> 1)".to_string())?;
    Ok(n)
}

fn parse_rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Coefficient file: one rational per data line, counted from index 0;
/// `#` starts a comment and lines left empty are skipped.
pub fn parse_coefficient_file(text: &str) -> Result<Vec<Rational>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_rational)
        .collect()
}

fn load_series(source: &SeriesSource) -> Result<SeriesSpec> {
    match (&source.series, &source.coeffs) {
        (Some(name), _) => SeriesSpec::builtin(name),
        (None, Some(path)) => load_coefficient_file(path),
        (None, None) => Err(Error::Parse("one of --series or --coeffs is required".into())),
    }
}

fn load_coefficient_file(path: &Path) -> Result<SeriesSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "coefficients".into());
    Ok(SeriesSpec::finite(&name, parse_coefficient_file(&text)?))
}

/// Float text with 15 significant digits.
pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { "0".into() } else { v.to_string() };
    }
    let exponent = v.abs().log10().floor() as i32;
    if !(-5..15).contains(&exponent) {
        return format!("{v:.14e}");
    }
    let decimals = (14 - exponent).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn fmt_multivector_f64(m: &Multivector<f64>) -> String {
    m.to_text(|c| fmt_f64(*c))
}

pub fn sum_control(tolerance: f64) -> SumControl {
    let max_terms = std::env::var(LMAX_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_TERMS);
    SumControl { tolerance, max_terms }
}

/// Output of one invocation; `success == false` maps to a nonzero exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, success: true }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    let format = config.format;
    match &config.command {
        Command::Appell { n, k } => cmd_appell(*n, *k, format.unwrap_or(Format::Text)),
        Command::Fueter { n, k, raw, .. } => cmd_fueter(*n, *k, !raw, format.unwrap_or(Format::Text)),
        Command::Verify(args) => cmd_verify(args, format.unwrap_or(Format::Text)),
        Command::Compare {
            n,
            source,
            k_max,
            alpha,
        } => cmd_compare(*n, source, *k_max, alpha.as_ref(), format.unwrap_or(Format::Json)),
        Command::Eval(args) => cmd_eval(args, format.unwrap_or(Format::Text)),
    }
}

pub fn cmd_appell(n: usize, k: usize, format: Format) -> Result<Outcome> {
    let table = AppellTable::new(n, k)?;
    let p = table.polynomial(k)?;
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&json!({
            "n": n,
            "k": k,
            "polynomial": p.to_json(),
            "c_table": table.rows(),
        })),
        Format::Text => {
            let mut out = format!("{p}\n# c_{n}^k\n");
            for row in table.rows() {
                out.push_str(&format!("{} {}\n", row.k, row.c));
            }
            out
        }
    }))
}

pub fn cmd_fueter(n: usize, k: usize, normalized: bool, format: Format) -> Result<Outcome> {
    let tau = fueter_sce_monomial(n, k, normalized)?;
    let alpha = match alpha_monomial(n, k) {
        Ok(a) => Some(a),
        Err(Error::VanishingMonomial { .. }) => None,
        Err(e) => return Err(e),
    };
    let note = alpha.is_none().then(|| "k < n-1: the transform vanishes identically".to_string());
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&json!({
            "n": n,
            "k": k,
            "normalized": normalized,
            "alpha": alpha.as_ref().map(fmt_rational),
            "polynomial": tau.to_json(),
            "note": note,
        })),
        Format::Text => {
            let mut out = format!("{tau}\n");
            match (&alpha, normalized) {
                (Some(a), true) => out.push_str(&format!("alpha = {}\n", fmt_rational(a))),
                (Some(a), false) => out.push_str(&format!("alpha = {} (not applied)\n", fmt_rational(a))),
                (None, _) => {}
            }
            if let Some(note) = note {
                out.push_str(&format!("note: {note}\n"));
            }
            out
        }
    }))
}

fn dimensions(n: Option<usize>) -> Vec<usize> {
    n.map(|n| vec![n]).unwrap_or_else(|| vec![3, 5, 7])
}

/// Evaluation points used by the closed-form suite.
pub fn closed_form_points() -> Vec<Rational> {
    ["-1", "-1/2", "1/2", "1", "2"]
        .iter()
        .map(|s| parse_rational(s).expect("literal"))
        .collect()
}

pub fn run_suite(args: &VerifyArgs, suite: Suite) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        suite: format!("{suite:?}").to_lowercase(),
        checks: Vec::new(),
        notes: Vec::new(),
    };
    for n in dimensions(args.n) {
        let part = match suite {
            Suite::Theorem1 => verify::theorem1(n, args.k_max.unwrap_or(15), args.flip_c)?,
            Suite::Vanishing => verify::vanishing(n)?,
            Suite::Monogenic => verify::monogenic(n, args.k_max.unwrap_or(30), args.flip_c)?,
            Suite::AppellProperty => verify::appell_property(n, args.k_max.unwrap_or(30), args.flip_c)?,
            Suite::Recurrence => {
                let f = SeriesSpec::builtin(&args.series)?;
                verify::recurrence(n, &f, args.k_max.unwrap_or(DEFAULT_TRUNCATION))?
            }
            Suite::Beta => verify::beta_operators(n, args.k_max.unwrap_or(40))?,
            Suite::ClosedForm => {
                let params = match &args.gamma {
                    Some(g) => ClassParameters::new(n, g.clone(), args.init.clone())?,
                    None => ClassParameters::exp(n)?,
                };
                verify::closed_form(
                    &params,
                    args.k_max.unwrap_or(DEFAULT_TRUNCATION),
                    &closed_form_points(),
                    sum_control(args.tolerance),
                )?
            }
            Suite::All => {
                let mut all = SuiteReport {
                    suite: "all".into(),
                    checks: Vec::new(),
                    notes: Vec::new(),
                };
                for s in [
                    Suite::Theorem1,
                    Suite::Vanishing,
                    Suite::Monogenic,
                    Suite::AppellProperty,
                    Suite::Beta,
                    Suite::ClosedForm,
                ] {
                    let sub = VerifyArgs { n: Some(n), ..args.clone_for(s) };
                    all.merge(run_suite(&sub, s)?);
                }
                for name in ["exp", "sinh", "cosh"] {
                    let f = SeriesSpec::builtin(name)?;
                    all.merge(verify::recurrence(n, &f, DEFAULT_TRUNCATION)?);
                }
                all
            }
        };
        report.merge(part);
    }
    Ok(report)
}

impl VerifyArgs {
    fn clone_for(&self, suite: Suite) -> Self {
        Self {
            suite,
            n: self.n,
            k_max: None,
            series: self.series.clone(),
            gamma: None,
            init: Vec::new(),
            tolerance: self.tolerance,
            flip_c: self.flip_c,
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<Outcome> {
    let report = run_suite(args, args.suite)?;
    let success = report.passed();
    let output = match format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&json!({
            "suite": report.suite,
            "passed": success,
            "checks": report.checks,
            "notes": report.notes,
        })),
    };
    Ok(Outcome { output, success })
}

pub fn cmd_compare(
    n: usize,
    source: &SeriesSource,
    k_max: usize,
    alpha: Option<&Rational>,
    format: Format,
) -> Result<Outcome> {
    let f = load_series(source)?;
    let report = compare_extensions(n, &f, k_max, alpha)?;
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&report.to_json()),
        Format::Text => {
            let j = report.to_json();
            let mut out = format!(
                "series={} n={} holds={} gamma={} alpha={}\n",
                j.series,
                j.n,
                j.holds,
                j.gamma.as_deref().unwrap_or("unconstrained"),
                j.alpha
            );
            for c in &j.coefficients {
                out.push_str(&format!(
                    "k={} tau={} eta={} {}\n",
                    c.k,
                    c.tau,
                    c.eta,
                    if c.equal { "equal" } else { "DIFFERENT" }
                ));
            }
            out.push_str(match report.first_mismatch() {
                None => "all coefficients equal\n",
                Some(_) => "extensions differ\n",
            });
            out
        }
    }))
}

pub fn cmd_eval(args: &EvalArgs, format: Format) -> Result<Outcome> {
    let n = args.n;
    if args.closed_form {
        let gamma = args
            .gamma
            .clone()
            .ok_or_else(|| Error::Parse("--closed-form needs --gamma".into()))?;
        let z = args
            .z
            .clone()
            .ok_or_else(|| Error::Parse("--closed-form needs --z".into()))?;
        let params = ClassParameters::new(n, gamma, args.init.clone())?;
        let value = closed_form_eval(&params, to_f64(&z), sum_control(args.tolerance))?;
        return Ok(Outcome::ok(match format {
            Format::Text => format!("{}\n", fmt_f64(value)),
            Format::Json => to_json(&json!({
                "n": n,
                "gamma": fmt_rational(&params.gamma),
                "init": params.initial.iter().map(fmt_rational).collect::<Vec<_>>(),
                "z": fmt_rational(&z),
                "value": fmt_f64(value),
            })),
        }));
    }
    let f = load_series(&args.source)?;
    if args.point.is_empty() {
        return Err(Error::Parse("--point x0,x1,...,xn is required".into()));
    }
    let x = Paravector::from_components(&args.point)?;
    if x.dim() != n {
        return Err(Error::DimensionMismatch(n, x.dim()));
    }
    let ext = appell_extension(n, &f, args.k_max)?;
    let value = ext.polynomial.evaluate_exact(&x)?.to_f64();
    Ok(Outcome::ok(match format {
        Format::Text => format!("{}\n", fmt_multivector_f64(&value)),
        Format::Json => to_json(&json!({
            "series": f.name,
            "n": n,
            "K": args.k_max,
            "point": args.point.iter().map(fmt_rational).collect::<Vec<_>>(),
            "value": fmt_multivector_f64(&value),
        })),
    }))
}
