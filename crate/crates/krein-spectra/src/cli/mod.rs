//! Command-line front end.

pub mod emit;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::asympt::{eta_pole_table, pole_table};
use crate::error::{Error, Result};
use crate::models::{Branch, Extension, ModelKind, ModelSpec, SpectralPoint};
use crate::specfn::{
    eta, graded_partition, heat_trace, heat_trace_diff, resolvent_trace_sum, zeta_continued, zeta_sum,
    SpectralSample, DEFAULT_TOL,
};
use crate::spectrum::first_eigenvalues;

pub use emit::{Cell, Format, Table};

/// Exit status for invalid input.
pub const EXIT_VALIDATION: i32 = 2;
/// Exit status for a numerical failure.
pub const EXIT_NUMERICAL: i32 = 3;
/// Exit status when `verify` has a failing criterion.
pub const EXIT_VERIFY_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "krein-spectra", version, about = "Spectra and spectral functions of singular operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "KREIN_SPECTRA_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Oscillator,
    Interval,
    Dirac,
    Ab,
    Susy,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub kappa: Option<f64>,
    /// Extension parameter, a number or `inf`.
    #[arg(long, visible_alias = "beta", allow_hyphen_values = true, default_value = "inf")]
    pub theta: String,
    /// Supercharge extension angle; overrides --theta.
    #[arg(long)]
    pub gamma: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First eigenvalues with their brackets.
    Spectrum {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Heat trace, or a difference of heat traces with --minus.
    Heat {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<f64>,
        /// Subtract the heat trace of this extension.
        #[arg(long, allow_hyphen_values = true)]
        minus: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Spectral zeta function; --order selects the continued form.
    Zeta {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        s: Vec<f64>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Eta function of the first-order models.
    Eta {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        s: Vec<f64>,
    },
    /// Resolvent trace by spectral summation.
    Resolvent {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        point: Vec<f64>,
        /// Points lie on the imaginary axis (the negative axis for the
        /// Schrödinger models).
        #[arg(long)]
        imaginary: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Poles and residues of the zeta (or eta) function down to --smin.
    Poles {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_negative_numbers = true, default_value_t = -3.0)]
        smin: f64,
        #[arg(long)]
        eta: bool,
    },
    /// Graded partition function of the supercharge.
    Graded {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Runs the self-check suite.
    Verify {
        /// `all` or a comma-separated list of criterion numbers.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl ModelArgs {
    fn spec(&self) -> Result<ModelSpec> {
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for the {:?} model", self.model)))
        };
        match self.model {
            ModelArg::Oscillator => ModelSpec::oscillator(need(self.nu, "nu")?),
            ModelArg::Interval => ModelSpec::interval(need(self.nu, "nu")?),
            ModelArg::Dirac => match (self.alpha, self.nu) {
                (Some(a), None) => ModelSpec::dirac(a),
                (None, Some(nu)) => ModelSpec::dirac_nu(nu),
                _ => Err(Error::InvalidParameter("the dirac model takes exactly one of --alpha, --nu".into())),
            },
            ModelArg::Ab => ModelSpec::aharonov_bohm(need(self.kappa, "kappa")?),
            ModelArg::Susy => ModelSpec::susy(need(self.alpha, "alpha")?),
        }
    }

    fn extension(&self, model: &ModelSpec) -> Result<Extension> {
        match self.gamma {
            Some(g) if model.kind() == ModelKind::Susy => Extension::from_susy_angle(model.param(), g),
            Some(_) => Err(Error::InvalidExtension("--gamma applies to the susy model only".into())),
            None => Extension::parse(&self.theta),
        }
    }

    fn resolve(&self) -> Result<(ModelSpec, Extension)> {
        let model = self.spec()?;
        let ext = self.extension(&model)?;
        Ok((model, ext))
    }
}

fn labelled(mut table: Table, model: &ModelSpec, ext: Extension) -> Table {
    table.model = Some(model.to_string());
    table.extension = Some(ext.to_string());
    table
}

const SAMPLE_COLUMNS: [&str; 4] = ["argument", "value", "bound", "terms"];

fn sample_row(s: &SpectralSample) -> Vec<Cell> {
    vec![s.argument.into(), s.value.into(), s.truncation_error_bound.into(), s.terms_used.into()]
}

fn sample_table(
    command: &str,
    args: &ModelArgs,
    points: &[f64],
    f: impl Fn(&ModelSpec, Extension, f64) -> Result<SpectralSample>,
) -> Result<Table> {
    let (model, ext) = args.resolve()?;
    let mut table = labelled(Table::new(command, &SAMPLE_COLUMNS), &model, ext);
    for &x in points {
        table.push(sample_row(&f(&model, ext, x)?));
    }
    Ok(table)
}

/// Result of one command: the table, and whether `verify` passed.
fn execute(command: &Command) -> Result<(Table, bool)> {
    let table = match command {
        Command::Spectrum { model, count } => {
            let (spec, ext) = model.resolve()?;
            let mut table =
                labelled(Table::new("spectrum", &["n", "lambda", "bracket_lo", "bracket_hi", "residual"]), &spec, ext);
            let branches: &[Branch] =
                if spec.is_signed() { &[Branch::Negative, Branch::Positive] } else { &[Branch::Positive] };
            for &branch in branches {
                for e in first_eigenvalues(&spec, ext, branch, *count)? {
                    let n = if branch == Branch::Negative { -(e.index as i64) } else { e.index as i64 };
                    table.push(vec![n.into(), e.lambda.into(), e.bracket.lo.into(), e.bracket.hi.into(), e.residual.into()]);
                }
            }
            table
        }
        Command::Heat { model, t, minus, tol } => {
            let other = minus.as_deref().map(Extension::parse).transpose()?;
            sample_table("heat", model, t, |m, ext, t| match other {
                Some(b) => heat_trace_diff(m, ext, b, t, *tol),
                None => heat_trace(m, ext, t, *tol),
            })?
        }
        Command::Zeta { model, s, order, tol } => sample_table("zeta", model, s, |m, ext, s| match order {
            Some(k) => zeta_continued(m, ext, s, *k),
            None => zeta_sum(m, ext, s, *tol),
        })?,
        Command::Eta { model, s } => sample_table("eta", model, s, eta)?,
        Command::Resolvent { model, point, imaginary, tol } => sample_table("resolvent", model, point, |m, ext, x| {
            let p = if *imaginary { SpectralPoint::Imaginary(x) } else { SpectralPoint::Real(x) };
            resolvent_trace_sum(m, ext, p, *tol)
        })?,
        Command::Graded { model, t, tol } => {
            if model.model != ModelArg::Susy {
                return Err(Error::Unsupported("the graded partition function is defined for the susy model".into()));
            }
            sample_table("graded", model, t, |m, ext, t| graded_partition(m.param(), ext, t, *tol))?
        }
        Command::Poles { model, smin, eta } => {
            let (spec, ext) = model.resolve()?;
            let poles = if *eta { eta_pole_table(&spec, ext, *smin)? } else { pole_table(&spec, ext, *smin)? };
            let mut table = labelled(Table::new("poles", &["s", "residue", "multiplicity", "source"]), &spec, ext);
            for p in &poles.entries {
                table.push(vec![p.s.into(), p.residue.into(), p.multiplicity.into(), format!("{:?}", p.source).to_lowercase().into()]);
            }
            table
        }
        Command::Verify { suite, seed } => {
            let ids = parse_suite(suite)?;
            let outcomes = verify::run_suite(&ids, *seed);
            for o in &outcomes {
                eprintln!("criterion {:>2} {}: {} ({:.2} s) {}", o.id, if o.passed { "PASS" } else { "FAIL" }, o.title, o.seconds, o.detail);
            }
            let mut table = Table::new("verify", &["criterion", "title", "passed", "seconds", "detail"]);
            for o in &outcomes {
                table.push(vec![i64::from(o.id).into(), o.title.into(), o.passed.into(), o.seconds.into(), o.detail.clone().into()]);
            }
            let passed = outcomes.iter().all(|o| o.passed);
            return Ok((table, passed));
        }
    };
    Ok((table, true))
}

fn parse_suite(text: &str) -> Result<Vec<u8>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| match p.trim().parse::<u8>() {
            Ok(id @ 1..=10) => Ok(id),
            _ => Err(Error::InvalidParameter(format!("unknown criterion {p:?}; expected 1-10 or all"))),
        })
        .collect()
}

fn kind_name(e: &Error) -> &'static str {
    match e {
        Error::Pole { .. } => "pole",
        Error::Domain { .. } => "domain",
        Error::InvalidParameter(_) => "invalid_parameter",
        Error::InvalidExtension(_) => "invalid_extension",
        Error::NotDistinguished(_) => "not_distinguished",
        Error::Unsupported(_) => "unsupported",
        Error::Divergent(_) => "divergent",
        Error::InsufficientOrder(_) => "insufficient_order",
        Error::NearEigenvalue { .. } => "near_eigenvalue",
        Error::BracketFailure(_) => "bracket_failure",
        Error::InfeasibleTolerance(_) => "infeasible_tolerance",
        Error::SignMixing => "sign_mixing",
        Error::Numerical(_) => "numerical",
    }
}

fn diagnostic(e: &Error) -> i32 {
    let record = serde_json::json!({ "error": kind_name(e), "message": e.to_string() });
    eprintln!("{record}");
    if e.is_validation() {
        EXIT_VALIDATION
    } else {
        EXIT_NUMERICAL
    }
}

fn write_table(cli: &Cli, table: &Table) -> io::Result<()> {
    match &cli.output {
        Some(path) => emit::emit(table, cli.format, BufWriter::new(File::create(path)?)),
        None => emit::emit(table, cli.format, io::stdout().lock()),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { 0 };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return diagnostic(&Error::InvalidParameter("--threads must be at least 1".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return diagnostic(&Error::Numerical(format!("cannot start thread pool: {e}"))),
    };
    let (table, passed) = match pool.install(|| execute(&cli.command)) {
        Ok(r) => r,
        Err(e) => return diagnostic(&e),
    };
    if let Err(e) = write_table(&cli, &table) {
        let _ = writeln!(io::stderr(), "{}", serde_json::json!({ "error": "io", "message": e.to_string() }));
        return EXIT_NUMERICAL;
    }
    if passed {
        0
    } else {
        EXIT_VERIFY_FAILED
    }
}
