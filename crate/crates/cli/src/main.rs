use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use promise_hull::format::{format_indices, write_csv};
use promise_hull::instances::generate;
use promise_hull::{
    rng_from_seed, run_bench, verify_promise, Algo, BenchConfig, Family, FormatError, HullError, InstanceFile,
    PredicateCounters, PromiseMode, Schedule,
};

#[derive(Parser)]
#[command(name = "promise-hull", version, about = "Upper hulls and Pareto fronts of promise inputs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write an instance file.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pi_seed: Option<u64>,
        #[arg(long)]
        j: Option<usize>,
        /// Hull fraction for random-promise.
        #[arg(long)]
        fraction: Option<f64>,
        /// Output path; standard output if omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Print the hull (or front) indices of an instance.
    Hull {
        #[arg(long, default_value = "det")]
        algo: String,
        #[arg(long = "in", short)]
        input: PathBuf,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        lambda: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check the promise first; exit 3 if it fails.
        #[arg(long)]
        verify: bool,
        /// Print predicate counters to standard error.
        #[arg(long)]
        counts: bool,
        /// Compute the Pareto front instead of the upper hull.
        #[arg(long)]
        pareto: bool,
    },
    /// Run algorithms over generated instances and write CSV.
    Bench {
        /// Comma-separated algorithm names.
        #[arg(long, value_delimiter = ',', default_value = "det")]
        algos: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "random-promise")]
        families: Vec<String>,
        /// Comma-separated ascending sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        fraction: Option<f64>,
        /// CSV path; standard output if omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check whether an instance satisfies the promise; exit 3 if not.
    Verify {
        #[arg(long = "in", short)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Upper)]
        mode: Mode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Upper,
    Full,
    Pareto,
}

impl From<Mode> for PromiseMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Upper => PromiseMode::Upper,
            Mode::Full => PromiseMode::Full,
            Mode::Pareto => PromiseMode::Pareto,
        }
    }
}

const USAGE: u8 = 2;
const PROMISE_VIOLATED: u8 = 3;
const GENERAL_POSITION: u8 = 4;

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

fn fail(code: u8, err: impl Into<anyhow::Error>) -> Failure {
    Failure { code, err: err.into() }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure { code: 1, err }
    }
}

fn hull_error(e: HullError) -> Failure {
    let code = match e {
        HullError::GeneralPosition { .. } => GENERAL_POSITION,
        HullError::InvalidParameter(_) | HullError::InvalidPermutation(_) | HullError::CoordinateOutOfRange { .. } => {
            USAGE
        }
        _ => 1,
    };
    fail(code, e)
}

fn read_instance(path: &Path) -> Result<InstanceFile, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    InstanceFile::parse(&text).map_err(|e| match e {
        FormatError::Parse { .. } => fail(USAGE, anyhow::anyhow!("{}: {e}", path.display())),
        FormatError::Hull(h) => hull_error(h),
        FormatError::Io(io) => fail(1, io),
    })
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display()))?,
        None => io::stdout().write_all(bytes).context("writing to standard output")?,
    }
    Ok(())
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    Family::from_name(s).ok_or_else(|| fail(USAGE, anyhow::anyhow!("unknown family '{s}'")))
}

fn parse_algo(s: &str) -> Result<Algo, Failure> {
    Algo::from_name(s).ok_or_else(|| fail(USAGE, anyhow::anyhow!("unknown algorithm '{s}'")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Gen { family, n, seed, pi_seed, j, fraction, out } => {
            let family = parse_family(&family)?;
            let inst = generate(family, n, seed, pi_seed, j, fraction).map_err(hull_error)?;
            emit(out.as_deref(), InstanceFile::from_instance(&inst).to_text().as_bytes())
        }
        Cmd::Hull { algo, input, b, lambda, g, seed, verify, counts, pareto } => {
            let mut algo = parse_algo(&algo)?;
            if pareto {
                algo = algo
                    .for_pareto()
                    .ok_or_else(|| fail(USAGE, anyhow::anyhow!("{} has no Pareto variant", algo.name())))?;
            }
            let file = read_instance(&input)?;
            let seq = file.working_seq().map_err(hull_error)?;
            if verify {
                let mode = if algo.is_pareto() { PromiseMode::Pareto } else { PromiseMode::Upper };
                if !verify_promise(&seq, mode).map_err(hull_error)? {
                    return Err(fail(PROMISE_VIOLATED, anyhow::anyhow!("promise violated")));
                }
            }
            let sched = Schedule { b, lambda, g, ..Schedule::default() };
            let mut ctx = PredicateCounters::new();
            let mut rng = rng_from_seed(seed);
            let chain = algo.run(&seq, &sched, &mut rng, &mut ctx).map_err(hull_error)?;
            if counts {
                eprintln!("coord_cmps={} orientation_tests={}", ctx.coord_cmps, ctx.orientation_tests);
            }
            emit(None, format!("{}\n", format_indices(&chain.indices())).as_bytes())
        }
        Cmd::Bench { algos, families, sizes, reps, seed, fraction, out } => {
            let threads = match std::env::var("PROMISE_HULL_THREADS") {
                Ok(v) => Some(v.parse::<usize>().ok().filter(|&t| t > 0).ok_or_else(|| {
                    fail(USAGE, anyhow::anyhow!("PROMISE_HULL_THREADS must be a positive integer, got '{v}'"))
                })?),
                Err(_) => None,
            };
            let cfg = BenchConfig {
                algos: algos.iter().map(|a| parse_algo(a)).collect::<Result<_, _>>()?,
                families: families.iter().map(|f| parse_family(f)).collect::<Result<_, _>>()?,
                sizes,
                reps,
                seed,
                fraction,
                threads,
                schedule: Schedule::sequential(),
            };
            let rows = run_bench(&cfg).map_err(hull_error)?;
            let mut buf = Vec::new();
            write_csv(&mut buf, &rows).context("formatting CSV")?;
            emit(out.as_deref(), &buf)
        }
        Cmd::Verify { input, mode } => {
            let file = read_instance(&input)?;
            let seq = file.working_seq().map_err(hull_error)?;
            let ok = verify_promise(&seq, mode.into()).map_err(hull_error)?;
            println!("{ok}");
            if ok {
                Ok(())
            } else {
                Err(fail(PROMISE_VIOLATED, anyhow::anyhow!("promise violated")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, err }) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
