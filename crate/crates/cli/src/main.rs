//! Command-line front end: parses matrices and function specs, runs the four
//! verification pipelines, and emits deterministic JSON/CSV reports.
//!
//! Exit codes: 0 = all checks passed, 1 = usage or input error,
//! 2 = a mathematical violation was found (the tool's product, not a bug).

mod commands;
mod output;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "loewner-ps",
    about = "Matrix-monotone function tests, trace inequality sweeps, and quantum Chernoff bounds",
    long_about = None,
    after_help = "Matrix files use JSON: {\"n\": <int>, \"data\": [[row], ...]} (row-major; the \
reader symmetrizes).\nCSV floats are printed with 17 significant digits. Set LOEWNER_PS_THREADS \
to cap parallelism.\nExit codes: 0 pass, 1 usage/input error, 2 mathematical violation found."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test n-monotonicity of a scalar function by sampling Loewner matrices
    CheckMonotone {
        /// Function spec: power:S, mobius:C, logshift, cubic, square, identity
        spec: String,
        /// Monotonicity order n to probe
        #[arg(long, default_value_t = 2)]
        order: usize,
        /// Sampling domain as LO,HI (log-uniform)
        #[arg(long, default_value = "0.01,100", value_parser = parse_domain)]
        domain: (f64, f64),
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Sweep the generalized Powers-Stormer inequality over random PSD pairs
    VerifyPs {
        /// Function specs to sweep (repeatable); defaults to the standard 13
        #[arg(short = 'f', long = "function")]
        functions: Vec<String>,
        /// Dimensions as a comma list, e.g. 2,3,4
        #[arg(long, default_value = "2,3,4,5,6", value_parser = parse_dims)]
        dims: std::vec::Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Relative tolerance for the `holds` verdict
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Weight matrix file for a non-tracial functional (pins the dimension)
        #[arg(long = "S", value_name = "PATH")]
        weight: Option<PathBuf>,
        /// Write the CSV report here (witness sidecar: <PATH>.witness.json)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit rows as a JSON array instead of CSV
        #[arg(long)]
        json: bool,
    },
    /// Compute the quantum Chernoff quantity Q(A,B)
    Chernoff {
        /// Matrix file for A
        #[arg(long = "A", value_name = "PATH")]
        a: PathBuf,
        /// Matrix file for B
        #[arg(long = "B", value_name = "PATH")]
        b: PathBuf,
        /// Width tolerance for the golden-section refinement in s
        #[arg(long, default_value_t = 1e-6)]
        tol_s: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the undoubled Chernoff-type bound across a function family
    ScanFamily {
        #[arg(long = "A", value_name = "PATH")]
        a: PathBuf,
        #[arg(long = "B", value_name = "PATH")]
        b: PathBuf,
        /// Family members (repeatable); defaults to the standard 13
        #[arg(short = 'f', long = "function")]
        functions: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Probe a weighted functional for trace-characterization violations
    TraceTest {
        /// Weight matrix file defining phi(X) = Tr(S X)
        #[arg(long = "S", value_name = "PATH")]
        weight: PathBuf,
        /// Function spec used by the ps test (must have f(0) = 0, f > 0)
        #[arg(short = 'f', long = "function", default_value = "power:0.5")]
        function: String,
        /// Which falsification test to run
        #[arg(long, default_value = "ps", value_parser = ["ps", "subadd", "absdom"])]
        kind: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Emit the rank-one probe pair and its closed-form identity residuals
    Probe { lambda: f64, mu: f64 },
}

fn parse_domain(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| "expected LO,HI".to_string())?;
    let lo: f64 = lo.trim().parse().map_err(|_| "bad lower bound")?;
    let hi: f64 = hi.trim().parse().map_err(|_| "bad upper bound")?;
    Ok((lo, hi))
}

fn parse_dims(s: &str) -> Result<Vec<usize>, String> {
    let dims: Result<Vec<usize>, _> = s.split(',').map(|d| d.trim().parse::<usize>()).collect();
    let dims = dims.map_err(|_| "dims must be a comma list of integers".to_string())?;
    if dims.is_empty() || dims.contains(&0) {
        return Err("dims must be positive".to_string());
    }
    Ok(dims)
}

fn init_thread_pool() {
    if let Ok(raw) = std::env::var("LOEWNER_PS_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    init_thread_pool();

    let outcome = match cli.command {
        Command::CheckMonotone {
            spec,
            order,
            domain,
            trials,
            seed,
        } => commands::check_monotone(&spec, order, domain, trials, seed),
        Command::VerifyPs {
            functions,
            dims,
            trials,
            seed,
            tol,
            weight,
            out,
            json,
        } => commands::verify_ps(functions, dims, trials, seed, tol, weight, out, json),
        Command::Chernoff { a, b, tol_s, out } => commands::chernoff(&a, &b, tol_s, out),
        Command::ScanFamily {
            a,
            b,
            functions,
            out,
        } => commands::scan_family(&a, &b, functions, out),
        Command::TraceTest {
            weight,
            function,
            kind,
            trials,
            seed,
        } => commands::trace_test(&weight, &function, &kind, trials, seed),
        Command::Probe { lambda, mu } => commands::probe(lambda, mu),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
