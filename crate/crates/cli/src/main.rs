use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use supercat::dsums::{d_sum_direct, q_sum, DSumParams, PsiSummand};
use supercat::exactnum::{render_rational, Integer, Rational};
use supercat::sums::{p_sum, psi, psi_t, r_dprime_sum, r_prime_sum, r_sum, t_sum};
use supercat::supercat::{catalan, phi, super_catalan, PhiParams};
use supercat::verifier::{all_ids, lookup, sweep, GridBounds, Report};
use supercat::Error;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "supercat", version, about = "Exact super Catalan convolutions and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one exact value.
    Compute(ComputeArgs),
    /// Check identities over a grid; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Like verify, with machine-readable output only.
    Sweep(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    SuperCatalan,
    Catalan,
    Psi,
    PsiT,
    Phi,
    P,
    R,
    RPrime,
    RDprime,
    TSum,
    DSum,
    Q,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    kind: Kind,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    l: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    m: Option<u32>,
    /// D-sum index j; for `q` the index s.
    #[arg(long)]
    j: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity to check; repeatable.
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Check every registered identity.
    #[arg(long)]
    all: bool,
    /// Start from the default grid (n<=10, l<=6, t<=n, m<=5); explicit bounds override it.
    #[arg(long)]
    default_grid: bool,
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    l_max: Option<u64>,
    #[arg(long)]
    t_max: Option<u64>,
    #[arg(long)]
    m_max: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Omit timing fields so reports are byte-reproducible.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::NegativeUpperIndex(_) | Error::UnknownIdentity(_) => {
                CliError::Usage(e.to_string())
            }
            Error::Integrity { .. } => CliError::Failure(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(format!("i/o error: {e}"))
    }
}

fn need<T>(value: Option<T>, flag: &str, kind: Kind) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("`compute {kind:?}` requires --{flag}")))
}

enum Value {
    Int(Integer),
    Frac(Rational),
}

fn compute(args: &ComputeArgs) -> Result<Value, CliError> {
    use Kind::*;
    let kind = args.kind;
    let n = || need(args.n, "n", kind);
    let l = || need(args.l, "l", kind);
    let t = || need(args.t, "t", kind);
    let j = || need(args.j, "j", kind);
    let value = match kind {
        SuperCatalan => Value::Int(super_catalan(n()?, l()?)?),
        Catalan => Value::Int(catalan(n()?)?),
        Psi => {
            let m = need(args.m, "m", kind)?;
            if m == 0 {
                return Err(CliError::Usage("--m must be at least 1".into()));
            }
            Value::Int(psi(n()?, m, l()?)?)
        }
        PsiT => Value::Int(psi_t(n()?, t()?, l()?)?),
        Phi => Value::Int(phi(PhiParams::new(n()?, l()?, t()?)?)?),
        P => Value::Int(p_sum(n()?, t()?, l()?)?),
        R => Value::Frac(r_sum(n()?, t()?, l()?)?),
        RPrime => Value::Frac(r_prime_sum(n()?, t()?, l()?)?),
        RDprime => Value::Frac(r_dprime_sum(n()?, t()?, l()?)?),
        TSum => Value::Frac(t_sum(n()?, t()?, l()?)?),
        DSum => {
            let p = DSumParams::new(n()?, j()?, t()?, l()?)?;
            Value::Int(d_sum_direct(&PsiSummand, p)?)
        }
        Q => Value::Frac(q_sum(n()?, j()?, l()?)?),
    };
    Ok(value)
}

fn grid_from(args: &VerifyArgs) -> GridBounds {
    let base = GridBounds::default_grid();
    GridBounds {
        n_max: args.n_max.unwrap_or(base.n_max),
        l_max: args.l_max.unwrap_or(base.l_max),
        t_max: args.t_max.or(base.t_max),
        m_max: args.m_max.unwrap_or(base.m_max),
    }
}

fn selected_ids(args: &VerifyArgs) -> Result<Vec<String>, CliError> {
    if args.all {
        return Ok(all_ids().into_iter().map(String::from).collect());
    }
    if args.ids.is_empty() {
        return Err(CliError::Usage("select identities with --id ID or --all".into()));
    }
    if let Some(bad) = args.ids.iter().find(|id| lookup(id).is_none()) {
        return Err(CliError::Usage(format!(
            "unknown identity `{bad}`; known: {}",
            all_ids().join(", ")
        )));
    }
    Ok(args.ids.clone())
}

fn write_report(report: &Report, format: Format, args: &VerifyArgs) -> Result<(), CliError> {
    let with_timing = !args.no_timestamp;
    let out: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(File::create(path).map_err(|e| {
            CliError::Failure(format!("cannot create {}: {e}", path.display()))
        })?),
        None => Box::new(io::stdout().lock()),
    };
    let out = BufWriter::new(out);
    match format {
        Format::Json => report.write_jsonl(out, with_timing)?,
        Format::Csv => report.write_csv(out)?,
        Format::Human => report.write_human(out, with_timing)?,
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs, machine_only: bool) -> Result<bool, CliError> {
    let ids = selected_ids(args)?;
    let format = match (args.format, machine_only) {
        (Some(Format::Human), true) => {
            return Err(CliError::Usage("sweep writes json or csv only".into()))
        }
        (Some(f), _) => f,
        (None, true) => Format::Json,
        (None, false) => Format::Human,
    };
    let jobs = match args.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let report = sweep(&ids, &grid_from(args), jobs)?;
    write_report(&report, format, args)?;
    Ok(report.is_success())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Compute(args) => {
            let rendered = match compute(&args)? {
                Value::Int(v) => v.to_string(),
                Value::Frac(v) => render_rational(&v),
            };
            println!("{rendered}");
            Ok(true)
        }
        Command::Verify(args) => run_verify(&args, false),
        Command::Sweep(args) => run_verify(&args, true),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version print and exit 0; everything else is a usage error
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILURE),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("Try 'supercat --help' for more information.");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
