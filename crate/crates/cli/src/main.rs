mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use qball::algebra::parse_word;
use qball::dynsys::{distinct_points, orbit_patch};
use qball::verify::{run_verification, VerificationReport, DEFAULT_MARGIN};
use qball::{algebra, OrbitTag, Rep, Series, SeriesTag};

/// Rewriting, orbits and verified truncated representations of Pol(Mat_2,2)_q.
#[derive(Parser)]
#[command(name = "qball", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word to normal form.
    NormalForm {
        /// Space-separated letters, e.g. "z22* z22". Empty for the unit.
        expr: String,
        /// Also print coefficients evaluated at this q.
        #[arg(long)]
        q: Option<f64>,
    },
    /// Enumerate a patch of an orbit as JSON.
    Orbit {
        /// Base point: 0,0,1 | 1,1,0 | 1,0,0 | 0,1,0 | 0,0,0.
        #[arg(long)]
        base: OrbitTag,
        /// Exponents m, l, k each run over [0, range).
        #[arg(long, default_value_t = 3)]
        range: i32,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        /// Keep points repeated along inert axes.
        #[arg(long)]
        all: bool,
    },
    /// Build a truncated representation and write its matrices as JSON.
    Build {
        #[arg(long)]
        series: SeriesTag,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        /// Comma-separated phases; zeros when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        phi: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Print or re-check a stored verification report.
    Report {
        path: PathBuf,
        /// Recompute every pass flag from the stored numbers.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    series: Option<SeriesTag>,
    /// Every series.
    #[arg(long)]
    all: bool,
    /// With --series, that series' phases. With --all, a grid: every series
    /// runs once per value, all its phases set to that value.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    phi: Vec<f64>,
    /// One or more comma-separated values.
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    q: Vec<f64>,
    /// Lattice size per axis; series default when omitted.
    #[arg(long)]
    cutoff: Option<usize>,
    /// Interior margin [default: 3].
    #[arg(long)]
    margin: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads.
    #[arg(long, env = "QBALL_WORKERS")]
    workers: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

enum Failure {
    /// Bad input or configuration.
    Config(anyhow::Error),
    /// A check ran and did not pass.
    Check(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Config(e)
    }
}

impl From<qball::Error> for Failure {
    fn from(e: qball::Error) -> Self {
        Failure::Config(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::NormalForm { expr, q } => normal_form(&expr, q),
        Command::Orbit { base, range, q, all } => orbit(base, range, q, all),
        Command::Build { series, cutoff, q, phi, out } => build(series, cutoff, q, phi, out.as_deref()),
        Command::Verify(args) => verify(args),
        Command::Report { path, check, format } => report(&path, check, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("qball: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(e)) => {
            eprintln!("qball: error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn normal_form(expr: &str, q: Option<f64>) -> Result<(), Failure> {
    let nf = algebra().normal_form(&parse_word(expr)?);
    println!("{nf}");
    if let Some(q) = q {
        for (m, c) in nf.evaluate_coefficients(q)? {
            println!("{c} * {m}");
        }
    }
    Ok(())
}

fn orbit(base: OrbitTag, range: i32, q: f64, all: bool) -> Result<(), Failure> {
    if range < 1 {
        return Err(anyhow!("--range must be at least 1").into());
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(qball::Error::QOutOfRange(q).into());
    }
    let r = 0..=range - 1;
    let mut points = orbit_patch(base.base::<f64>(), r.clone(), r.clone(), r, q);
    if !all {
        points = distinct_points(&points);
    }
    println!("{}", serde_json::to_string_pretty(&points).context("serializing orbit")?);
    Ok(())
}

fn phases_for(series: SeriesTag, phi: &[f64]) -> Vec<f64> {
    if phi.is_empty() {
        vec![0.0; series.phase_arity()]
    } else {
        phi.to_vec()
    }
}

fn build(series: SeriesTag, cutoff: Option<usize>, q: f64, phi: Vec<f64>, out: Option<&Path>) -> Result<(), Failure> {
    let spec = Series::new(series, phases_for(series, &phi), q)?;
    let rep = Rep::build(spec, cutoff.unwrap_or_else(|| series.default_cutoff(DEFAULT_MARGIN)))?;
    let json = serde_json::to_string(&rep).context("serializing representation")?;
    emit(out, &json)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

/// Effective cutoff for one series. An explicit margin must fit the cutoff;
/// with the default margin a too-small cutoff is raised, as the defaults are.
fn cutoff_for(series: SeriesTag, cutoff: Option<usize>, margin: Option<usize>) -> Result<usize, Failure> {
    let m = margin.unwrap_or(DEFAULT_MARGIN);
    let Some(n) = cutoff else {
        return Ok(series.default_cutoff(m));
    };
    if series.rank() == 0 || n > 2 * m {
        return Ok(n);
    }
    if margin.is_some() {
        return Err(qball::Error::NoInterior { cutoff: n, margin: m }.into());
    }
    eprintln!("qball: cutoff {n} leaves no interior at margin {m}; using {}", 2 * m + 1);
    Ok(2 * m + 1)
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let margin = args.margin.unwrap_or(DEFAULT_MARGIN);
    let mut jobs = Vec::new();
    match args.series {
        Some(series) => {
            for &q in &args.q {
                let spec = Series::new(series, phases_for(series, &args.phi), q)?;
                jobs.push((spec, cutoff_for(series, args.cutoff, args.margin)?));
            }
        }
        None => {
            let grid = if args.phi.is_empty() { vec![0.0] } else { args.phi.clone() };
            for series in SeriesTag::ALL {
                let n = cutoff_for(series, args.cutoff, args.margin)?;
                let grid = if series.phase_arity() == 0 { &[0.0][..] } else { &grid[..] };
                for &q in &args.q {
                    for &phi in grid {
                        jobs.push((Series::new(series, vec![phi; series.phase_arity()], q)?, n));
                    }
                }
            }
        }
    }

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = args.workers {
        pool = pool.num_threads(w);
    }
    let pool = pool.build().context("starting worker pool")?;
    let reports: Vec<VerificationReport> = pool
        .install(|| jobs.into_par_iter().map(|(spec, n)| run_verification(spec, n, margin)).collect::<Result<_, _>>())?;

    let json = if reports.len() == 1 && args.series.is_some() && args.q.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    }
    .context("serializing report")?;
    if let Some(path) = &args.out {
        fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    match args.format {
        Format::Json => println!("{json}"),
        Format::Md => print!("{}", render::markdown(&reports)),
    }
    conclude(&reports)
}

fn conclude(reports: &[VerificationReport]) -> Result<(), Failure> {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} q={} phases={:?}: {}", r.series, r.q, r.phases, r.failures().join(", ")))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("checks failed:\n  {}", failed.join("\n  "))))
    }
}

fn read_reports(path: &Path) -> anyhow::Result<Vec<VerificationReport>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).context("parsing report JSON")?;
    let reports = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|r| vec![r])
    };
    reports.context("report does not match the verification schema")
}

fn report(path: &Path, check: bool, format: Format) -> Result<(), Failure> {
    let stored = read_reports(path)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&stored).context("serializing report")?),
        Format::Md => print!("{}", render::markdown(&stored)),
    }
    if !check {
        return Ok(());
    }
    let rechecked: Vec<VerificationReport> = stored.iter().map(VerificationReport::recheck).collect();
    for (a, b) in stored.iter().zip(&rechecked) {
        if a != b {
            return Err(Failure::Check(format!("{} q={}: stored pass flags do not match the stored numbers", a.series, a.q)));
        }
    }
    conclude(&rechecked)
}
