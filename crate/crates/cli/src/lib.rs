//! The `krivine` command line: argument parsing, command execution and the
//! exit-code contract. `main` only forwards to [`run`].

pub mod report;

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use krivine_core::mc::{estimate_family_phi_i, estimate_family_phi_t, Family, McConfig};
use krivine_core::optimize::{grid_scan_with, maximize_eta_with};
use krivine_core::phi::{
    phi_i_bessel, phi_real_t, threshold, verify_theorem, PhiMethod, RotationFamily,
};
use krivine_core::series::{
    alternation_check, conditional_bound, mehler_coefficients, revert_odd_series,
};
use krivine_core::Error;
use serde_json::{json, Value};

use report::{int, real, reals, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "krivine",
    version,
    about = "Numerical checks of Gaussian sign-correlation bounds"
)]
pub struct Cli {
    /// Output format; csv is only available for `sweep`.
    #[arg(long, global = true, env = "KRIVINE_FORMAT", default_value = "json")]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads. Results do not depend on this value.
    #[arg(long, global = true, env = "KRIVINE_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Polar,
    Cartesian,
    Bessel,
}

impl From<Method> for PhiMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Polar => PhiMethod::Polar,
            Method::Cartesian => PhiMethod::Cartesian,
            Method::Bessel => PhiMethod::Bessel,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Identity1,
    Rotation3,
    Hermite5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    PhiI,
    PhiT,
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("must be a positive finite number, got {s}"))
    }
}

fn finite(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("must be finite, got {s}"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute Phi(i)/i for the rotation family and compare it with the threshold.
    Verify(VerifyArgs),
    /// Tabulate Phi(i)/i on an equispaced eta grid.
    Sweep(SweepArgs),
    /// Taylor coefficients of Phi(t), their reversion and the sign pattern.
    Series(SeriesArgs),
    /// Monte Carlo estimate for a built-in family.
    Mc(McArgs),
    /// Maximise Phi(i)/i over an eta bracket.
    Optimize(OptimizeArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    #[arg(long, value_parser = finite)]
    pub eta: f64,
    #[arg(long, value_enum, default_value = "bessel")]
    pub method: Method,
    #[arg(long, value_parser = positive, default_value = "1e-9")]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    #[arg(long, value_parser = finite)]
    pub lo: f64,
    #[arg(long, value_parser = finite)]
    pub hi: f64,
    #[arg(long, default_value_t = 20)]
    pub steps: usize,
    #[arg(long, value_parser = positive, default_value = "1e-9")]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SeriesArgs {
    #[arg(long, value_parser = finite)]
    pub eta: f64,
    #[arg(long, default_value_t = 11)]
    pub order: usize,
    #[arg(long, value_parser = positive, default_value = "1e-9")]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct McArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Required for rotation3.
    #[arg(long, value_parser = finite)]
    pub eta: Option<f64>,
    /// Required for hermite5.
    #[arg(long, value_parser = finite)]
    pub epsilon: Option<f64>,
    #[arg(long, value_enum, default_value = "phi-i")]
    pub target: Target,
    /// Correlation, required for phi-t.
    #[arg(long, value_parser = finite)]
    pub t: Option<f64>,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
    /// Tolerance of the quadrature reference, when one exists.
    #[arg(long, value_parser = positive, default_value = "1e-9")]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct OptimizeArgs {
    #[arg(long, value_parser = finite)]
    pub lo: f64,
    #[arg(long, value_parser = finite)]
    pub hi: f64,
    #[arg(long, value_parser = positive, default_value = "1e-4")]
    pub xtol: f64,
    #[arg(long, value_parser = positive, default_value = "1e-9")]
    pub tol: f64,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Numerical(Error::InvalidArgument(_)) => EXIT_USAGE,
            CliError::Numerical(Error::NonConvergence { .. }) => EXIT_NONCONVERGENCE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Numerical(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Numerical(e)
    }
}

/// A finished command: the rendered report and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

/// A report plus an optional CSV table and the exit code it implies.
struct Produced {
    report: Report,
    table: Option<String>,
    exit_code: i32,
}

impl Produced {
    fn ok(report: Report) -> Self {
        Self {
            report,
            table: None,
            exit_code: EXIT_OK,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let threads = cli.threads as usize;
    if cli.format == Format::Csv && !matches!(cli.command, Command::Sweep(_)) {
        return Err(CliError::Usage(
            "csv output is only available for sweep".into(),
        ));
    }
    let produced = match &cli.command {
        Command::Verify(a) => verify(a)?,
        Command::Sweep(a) => sweep(a, threads)?,
        Command::Series(a) => series(a)?,
        Command::Mc(a) => mc(a, threads)?,
        Command::Optimize(a) => optimize(a, threads)?,
    };
    let output = match cli.format {
        Format::Json => produced.report.to_json(),
        Format::Text => produced.report.to_text(),
        Format::Csv => produced.table.expect("sweep always builds a table"),
    };
    Ok(Outcome {
        exit_code: produced.exit_code,
        output,
    })
}

fn verify(a: &VerifyArgs) -> Result<Produced, CliError> {
    let method = PhiMethod::from(a.method);
    let r = verify_theorem(&RotationFamily::new(a.eta)?, method, a.tol)?;
    let mut rep = Report::new("verify");
    rep.input("eta", real(a.eta))
        .input("method", Value::String(method.as_str().into()))
        .input("tol", real(a.tol));
    rep.value = Some(r.phi_i_value);
    rep.error_estimate = Some(r.error_estimate);
    rep.threshold = Some(r.threshold);
    rep.margin = Some(r.margin);
    rep.pass = Some(r.pass);
    rep.detail("evaluations", int(r.evaluations as u64));
    Ok(Produced {
        report: rep,
        table: None,
        exit_code: if r.pass { EXIT_OK } else { EXIT_FAIL },
    })
}

fn sweep(a: &SweepArgs, threads: usize) -> Result<Produced, CliError> {
    let s = grid_scan_with(a.lo, a.hi, a.steps, a.tol, threads)?;
    let mut rep = Report::new("sweep");
    rep.input("lo", real(a.lo))
        .input("hi", real(a.hi))
        .input("steps", int(a.steps as u64))
        .input("tol", real(a.tol));
    rep.value = Some(s.best_value);
    rep.threshold = Some(threshold());
    rep.margin = Some(s.best_value - threshold());
    let points: Vec<Value> = s
        .points
        .iter()
        .map(|p| json!({"eta": real(p.eta), "value": real(p.value), "error_estimate": real(p.error_estimate)}))
        .collect();
    rep.detail("best_eta", real(s.best_eta))
        .detail("points", Value::Array(points));

    let mut table = String::from("eta,value,error_estimate\n");
    for p in &s.points {
        table.push_str(&format!(
            "{},{},{}\n",
            real(p.eta),
            real(p.value),
            real(p.error_estimate)
        ));
    }
    Ok(Produced {
        report: rep,
        table: Some(table),
        exit_code: EXIT_OK,
    })
}

fn series(a: &SeriesArgs) -> Result<Produced, CliError> {
    let family = RotationFamily::new(a.eta)?;
    let c = mehler_coefficients(&family, a.order, a.tol)?;
    let b = revert_odd_series(&c)?;
    let verdict = alternation_check(&b);
    let v = phi_i_bessel(&family, a.tol)?;
    let bound = conditional_bound(v.value)?;

    let mut rep = Report::new("series");
    rep.input("eta", real(a.eta))
        .input("order", int(a.order as u64))
        .input("tol", real(a.tol));
    rep.value = Some(v.value);
    rep.error_estimate = Some(v.error_estimate);
    rep.threshold = Some(threshold());
    rep.margin = Some(v.value - threshold());
    let signs: String = verdict.signs.iter().map(|s| s.symbol()).collect();
    rep.detail("coefficients", reals(c.coeffs()))
        .detail("inverse_coefficients", reals(b.coeffs()))
        .detail("alternating", Value::Bool(verdict.alternating))
        .detail(
            "first_violation",
            verdict
                .first_violation
                .map_or(Value::Null, |k| int(k as u64)),
        )
        .detail("signs", Value::String(signs))
        .detail("conditional_bound", real(bound));
    Ok(Produced::ok(rep))
}

fn mc(a: &McArgs, threads: usize) -> Result<Produced, CliError> {
    let family = match a.family {
        FamilyName::Identity1 => Family::Identity1,
        FamilyName::Rotation3 => Family::Rotation3 {
            eta: a
                .eta
                .ok_or_else(|| CliError::Usage("rotation3 needs --eta".into()))?,
        },
        FamilyName::Hermite5 => Family::Hermite5 {
            epsilon: a
                .epsilon
                .ok_or_else(|| CliError::Usage("hermite5 needs --epsilon".into()))?,
        },
    };
    let cfg = McConfig { threads };

    let mut rep = Report::new("mc");
    rep.input("family", Value::String(family.name().into()));
    if let Family::Rotation3 { eta } = family {
        rep.input("eta", real(eta));
    }
    if let Family::Hermite5 { epsilon } = family {
        rep.input("epsilon", real(epsilon));
    }

    let (est, reference) = match a.target {
        Target::PhiI => {
            rep.input("target", Value::String("phi-i".into()));
            let est = estimate_family_phi_i(&family, a.samples, a.seed, &cfg)?;
            rep.threshold = Some(threshold());
            rep.margin = Some(est.mean - threshold());
            (est, phi_i_reference(&family, a.tol)?)
        }
        Target::PhiT => {
            let t =
                a.t.ok_or_else(|| CliError::Usage("phi-t needs --t".into()))?;
            rep.input("target", Value::String("phi-t".into()))
                .input("t", real(t));
            let est = estimate_family_phi_t(&family, t, a.samples, a.seed, &cfg)?;
            (est, phi_t_reference(&family, t, a.tol)?)
        }
    };
    rep.input("samples", int(a.samples))
        .input("seed", int(a.seed));
    rep.value = Some(est.mean);
    rep.stderr = Some(est.stderr);
    rep.samples = Some(est.samples);
    rep.seed = Some(est.seed);
    if let Some(r) = reference {
        rep.detail("reference", real(r))
            .detail("z_score", real(est.z_score(r)));
    }
    Ok(Produced::ok(rep))
}

fn phi_i_reference(family: &Family, tol: f64) -> Result<Option<f64>, CliError> {
    Ok(match *family {
        Family::Identity1 | Family::Hermite5 { epsilon: 0.0 } => Some(threshold()),
        Family::Rotation3 { eta } => Some(phi_i_bessel(&RotationFamily::new(eta)?, tol)?.value),
        Family::Hermite5 { .. } => None,
    })
}

fn phi_t_reference(family: &Family, t: f64, tol: f64) -> Result<Option<f64>, CliError> {
    Ok(match *family {
        Family::Identity1 | Family::Hermite5 { epsilon: 0.0 } => Some(2.0 / PI * t.asin()),
        Family::Rotation3 { eta } if t.abs() < 1.0 => {
            Some(phi_real_t(&RotationFamily::new(eta)?, t, tol)?.value)
        }
        _ => None,
    })
}

fn optimize(a: &OptimizeArgs, threads: usize) -> Result<Produced, CliError> {
    let m = maximize_eta_with(a.lo, a.hi, a.xtol, a.tol, threads)?;
    let mut rep = Report::new("optimize");
    rep.input("lo", real(a.lo))
        .input("hi", real(a.hi))
        .input("xtol", real(a.xtol))
        .input("tol", real(a.tol));
    rep.value = Some(m.value_star);
    rep.error_estimate = Some(m.error_estimate);
    rep.threshold = Some(threshold());
    rep.margin = Some(m.value_star - threshold());
    rep.detail("eta_star", real(m.eta_star))
        .detail("unimodal", Value::Bool(m.unimodal))
        .detail("fallback_used", Value::Bool(m.fallback_used))
        .detail("evaluations", int(m.evaluations as u64));
    Ok(Produced::ok(rep))
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(CliError::Io)
        }
    }
}

/// Parse, execute and print; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = execute(&cli).and_then(|o| emit(&cli, &o.output).map(|_| o.exit_code));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
