//! `hopf-sr`: evaluate, classify and solve sub-Riemannian geodesics on S^3.
//!
//! Exit codes: 0 success, 1 internal inconsistency, 2 usage or domain
//! error, 3 I/O failure, 4 no solution within the search bound.

mod parse;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use hopf_sr::bvp::{b_function, phi_function, psi_function, solve, DEFAULT_CASE_EPS};
use hopf_sr::classify::{classify, VerticalRatio};
use hopf_sr::format::{csv_row, to_json_pretty};
use hopf_sr::geodesic::{sample_s3, write_curve_csv};
use hopf_sr::{cc_distance, Endpoint, S3GeodesicParams, SolverConfig};
use num_complex::Complex64;

/// Inputs off the unit sphere by less than this are renormalized.
const UNIT_TOL: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Core(#[from] hopf_sr::Error),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use hopf_sr::Error as E;
        match self {
            CliError::Domain(_) => 2,
            CliError::Io(_) => 3,
            CliError::Core(E::NoSolutionWithinQmax { .. } | E::OracleNoCandidate) => 4,
            CliError::Core(E::InconsistentMinimizer { .. }) => 1,
            CliError::Core(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hopf-sr", version, about = "Sub-Riemannian geodesics on the Hopf sphere S^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample the geodesic (u, rho, alpha) from (1, 0) at uniform s in [0, 1].
    Eval(EvalArgs),
    /// Open/closed classification of an arc-length geodesic.
    Classify(ClassifyArgs),
    /// All geodesics from (1, 0) to an endpoint, as JSON.
    Solve(EndpointArgs),
    /// Carnot-Caratheodory distance from (1, 0) to an endpoint, as JSON.
    Distance(EndpointArgs),
    /// CSV table of Phi, Psi or B for re-plotting.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
struct EvalArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real)]
    u: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real)]
    rho: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real, default_value = "0")]
    alpha: f64,
    /// Number of rows, at least 2.
    #[arg(long, default_value_t = 101)]
    samples: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
#[command(group(ArgGroup::new("speed").required(true).args(["vf", "ratio"])))]
struct ClassifyArgs {
    /// Vertical speed of the arc-length geodesic.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::real)]
    vf: Option<f64>,
    /// Exact ratio c = p/q, coprime with 0 <= p < q.
    #[arg(long, value_parser = parse::ratio)]
    ratio: Option<(u64, u64)>,
    /// Fiber intersections listed for open geodesics.
    #[arg(long, default_value_t = 8)]
    hits: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct EndpointArgs {
    /// First coordinate as re,im.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::complex)]
    z1: Complex64,
    /// Second coordinate as re,im.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::complex)]
    z2: Complex64,
    /// Largest branch index searched.
    #[arg(long, default_value_t = 8)]
    qmax: u32,
    /// Tolerance for tagging fiber, antipodal and horizontal-sphere endpoints.
    #[arg(long, default_value_t = DEFAULT_CASE_EPS)]
    case_eps: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Function {
    Phi,
    Psi,
    B,
}

#[derive(Debug, clap::Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    function: Function,
    #[arg(long)]
    z1abs: f64,
    /// Defaults to sqrt(1 - z1abs^2). Used by `b` only.
    #[arg(long)]
    z2abs: Option<f64>,
    /// Argument range a:b; ends accept multiples of pi such as `4pi`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::range)]
    range: (f64, f64),
    #[arg(long, default_value_t = 1001)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<String, CliError> {
    if args.samples < 2 {
        return Err(CliError::Domain(format!("--samples must be at least 2, got {}", args.samples)));
    }
    let params = S3GeodesicParams::new(args.u, args.rho, args.alpha)?;
    let samples = sample_s3(&params, args.samples);
    Ok(match args.format {
        Format::Json => to_json_pretty(&samples) + "\n",
        Format::Csv => {
            let mut buf = Vec::new();
            write_curve_csv(&samples, &mut buf)?;
            String::from_utf8(buf).expect("CSV output is ASCII")
        }
    })
}

fn cmd_classify(args: &ClassifyArgs) -> Result<String, CliError> {
    let ratio = match (args.vf, args.ratio) {
        (Some(vf), None) => VerticalRatio::from_vertical_speed(vf),
        (None, Some((p, q))) => VerticalRatio::Rational { p, q },
        _ => unreachable!("clap enforces exactly one of --vf, --ratio"),
    };
    Ok(to_json_pretty(&classify(ratio, args.hits)?) + "\n")
}

fn endpoint(args: &EndpointArgs) -> Result<Endpoint, CliError> {
    let norm = (args.z1.norm_sqr() + args.z2.norm_sqr()).sqrt();
    if !((norm - 1.0).abs() <= UNIT_TOL) {
        return Err(CliError::Domain(format!(
            "endpoint norm {norm} is not within {UNIT_TOL:e} of 1"
        )));
    }
    if !(args.case_eps > 0.0) {
        return Err(CliError::Domain(format!("--case-eps must be positive, got {}", args.case_eps)));
    }
    Ok(Endpoint::with_case_eps(args.z1 / norm, args.z2 / norm, args.case_eps)?)
}

fn cmd_solve(args: &EndpointArgs) -> Result<String, CliError> {
    let e = endpoint(args)?;
    let sols = solve(&e, &SolverConfig::default().with_q_max(args.qmax))?;
    Ok(to_json_pretty(&sols) + "\n")
}

fn cmd_distance(args: &EndpointArgs) -> Result<String, CliError> {
    let e = endpoint(args)?;
    let d = cc_distance(&e, &SolverConfig::default().with_q_max(args.qmax))?;
    Ok(to_json_pretty(&d) + "\n")
}

fn cmd_table(args: &TableArgs) -> Result<String, CliError> {
    if args.samples < 2 {
        return Err(CliError::Domain(format!("--samples must be at least 2, got {}", args.samples)));
    }
    if !(0.0..=1.0).contains(&args.z1abs) {
        return Err(CliError::Domain(format!("--z1abs must be in [0, 1], got {}", args.z1abs)));
    }
    let z2abs = args.z2abs.unwrap_or_else(|| (1.0 - args.z1abs * args.z1abs).sqrt());
    let (a, b) = args.range;
    let n = args.samples;
    let (header, f): (&str, Box<dyn Fn(f64) -> f64>) = match args.function {
        Function::Phi => ("rho,phi", Box::new(|x| phi_function(x, args.z1abs).unwrap_or(f64::NAN))),
        Function::Psi => ("rho,psi", Box::new(|x| psi_function(x, args.z1abs).unwrap_or(f64::NAN))),
        Function::B => ("u,b", Box::new(move |x| b_function(x, args.z1abs, z2abs).unwrap_or(f64::NAN))),
    };
    let mut text = format!("{header}\n");
    let mut defined = 0usize;
    for k in 0..n {
        let x = if k == n - 1 { b } else { a + (b - a) * k as f64 / (n - 1) as f64 };
        let y = f(x);
        defined += usize::from(!y.is_nan());
        text.push_str(&csv_row(&[x, y]));
    }
    if defined == 0 {
        return Err(CliError::Domain(format!("function is undefined on all of {a}:{b}")));
    }
    Ok(text)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let (text, out) = match &cli.command {
        Command::Eval(a) => (cmd_eval(a)?, a.out.as_ref()),
        Command::Classify(a) => (cmd_classify(a)?, a.out.as_ref()),
        Command::Solve(a) => (cmd_solve(a)?, a.out.as_ref()),
        Command::Distance(a) => (cmd_distance(a)?, a.out.as_ref()),
        Command::Table(a) => (cmd_table(a)?, a.out.as_ref()),
    };
    emit(&text, out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hopf-sr: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
