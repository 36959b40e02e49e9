use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lsum::closed::{closed_sum, lemma_sum, Method};
use lsum::grid::GridConfig;
use lsum::output::{fmt_f64, write_records, Format};
use lsum::verify::{table_grid, verify_grid, Summary, VerifyRecord};
use lsum::{oracle_sum, Error, SeriesConfig, Sign, SumSpec};

#[derive(Parser)]
#[command(
    name = "lsum",
    version,
    about = "Evaluate and cross-check Laguerre-polynomial series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one sum.
    Eval(EvalArgs),
    /// Compare closed, intermediate and direct values over a grid.
    Verify(GridArgs),
    /// Tabulate closed and intermediate values over a grid (no oracle).
    Table(GridArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 0)]
    p: u32,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign_nu: String,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign_p: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    f: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, default_value = "closed")]
    method: String,
    #[arg(long, default_value_t = 1e-14)]
    tol: f64,
    #[arg(long, default_value_t = 400)]
    max_terms: usize,
}

#[derive(Args)]
struct GridArgs {
    /// Flat key = value grid file; defaults apply to absent keys.
    #[arg(long)]
    grid: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: String,
    /// Overrides the grid's agreement tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    max_terms: Option<usize>,
}

enum Failure {
    Usage(Error),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Csv(_) | Error::Json(_) => Failure::Runtime(e),
            other => Failure::Usage(other),
        }
    }
}

fn eval(args: &EvalArgs) -> Result<ExitCode, Failure> {
    let spec = SumSpec {
        m: args.m,
        p: args.p,
        sign_nu: args.sign_nu.parse::<Sign>()?,
        sign_p: args.sign_p.parse::<Sign>()?,
        nu: args.nu,
        f: args.f,
        x: args.x,
    };
    let method: Method = args.method.parse()?;
    if args.tol.is_nan() || args.tol <= 0.0 || args.max_terms == 0 {
        return Err(Error::Config("tol and max_terms must be positive".into()).into());
    }
    spec.validate()?;
    let cfg = SeriesConfig {
        tol: args.tol,
        max_terms: args.max_terms,
    };
    let (result, dispatch) = match method {
        Method::Closed => {
            let c = closed_sum(&spec, &cfg)?;
            (c.result, Some(c.dispatch))
        }
        Method::Lemma => (lemma_sum(&spec, &cfg)?, None),
        Method::Oracle => (oracle_sum(&spec, &cfg)?, None),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut line = |k: &str, v: String| writeln!(out, "{k} = {v}").map_err(Error::from);
    line("value", fmt_f64(result.value))?;
    line("method", method.as_str().to_string())?;
    if let Some(d) = dispatch {
        line("dispatch", d.to_string())?;
    }
    line("terms_used", result.terms_used.to_string())?;
    line("trunc_estimate", fmt_f64(result.trunc_estimate))?;
    line("status", result.status.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn load_grid(args: &GridArgs) -> Result<(GridConfig, Format), Failure> {
    let mut grid = match &args.grid {
        Some(path) => GridConfig::from_file(path)?,
        None => GridConfig::default(),
    };
    if let Some(t) = args.tol {
        grid.tol = t;
    }
    if let Some(n) = args.max_terms {
        grid.max_terms = n;
    }
    grid.validate()?;
    Ok((grid, args.format.parse()?))
}

fn emit(records: &[VerifyRecord], format: Format, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(Error::from)
                .map_err(Failure::Runtime)?;
            write_records(records, format, BufWriter::new(file)).map_err(Failure::Runtime)
        }
        None => write_records(records, format, io::stdout().lock()).map_err(Failure::Runtime),
    }
}

fn verify(args: &GridArgs) -> Result<ExitCode, Failure> {
    let (grid, format) = load_grid(args)?;
    let records = verify_grid(&grid)?;
    emit(&records, format, args.out.as_deref())?;
    let summary = Summary::of(&records);
    eprintln!("passed/failed/skipped = {summary}");
    Ok(if summary.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn table(args: &GridArgs) -> Result<ExitCode, Failure> {
    let (grid, format) = load_grid(args)?;
    let records = table_grid(&grid)?;
    emit(&records, format, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Eval(a) => eval(a),
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
