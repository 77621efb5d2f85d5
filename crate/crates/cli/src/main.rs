use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qprimes::models::{APrimeMode, BandVariant, ModelParams};
use qprimes_cli::commands::{self, Engine, FigureId, ReportOptions, TableId};
use qprimes_cli::report::OutputFormat;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BandArg {
    Printed,
    Squared,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Unit,
    Fit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Oracle,
    Exact,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Prime counts, interval statistics, divisibility checks and report tables.
#[derive(Parser)]
#[command(name = "qprimes", version)]
struct Cli {
    /// Density constant A' used by the models in fit mode
    #[arg(long, global = true, default_value_t = 1.06)]
    a_prime: f64,

    /// Scatter-band variant for twin and Goldbach models
    #[arg(long, global = true, value_enum, default_value_t = BandArg::Squared)]
    band: BandArg,

    /// Constant mode: unit pins A' = ln 3, fit uses --a-prime
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Fit)]
    mode: ModeArg,

    /// Counting engine for scalar queries
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Oracle)]
    engine: EngineArg,

    /// Upper bound for any sieved value
    #[arg(long, global = true, default_value_t = qprimes::sieve::DEFAULT_CEILING)]
    ceiling: u64,

    /// Output encoding
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Evaluate model logs at the exact preceding prime instead of n+1
    #[arg(long, global = true)]
    exact_prec: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count non-primes and primes up to x
    Pi { x: u64 },
    /// Reproduce a reference table with recomputed model columns
    Table { id: TableId },
    /// Emit per-index figure data: observed value, model mean and band
    Figure {
        id: FigureId,
        /// Largest interval index (or even number for 9.1); defaults to the
        /// published plotting range
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Enumerate the odd-prime decompositions of an even number
    Goldbach { two_m: u64 },
    /// Verify the 2n+1 divisibility clause for one n, or sweep all n
    Divisibility {
        n: Option<u64>,
        /// Check every applicable n up to this bound
        #[arg(long)]
        sweep: Option<u64>,
    },
    /// Scan consecutive prime gaps up to x against 2*floor(sqrt(upper))
    Gapcheck { x: u64 },
}

fn run(cli: Cli) -> Result<bool, qprimes::Error> {
    let opts = ReportOptions {
        model: ModelParams {
            a_prime: cli.a_prime,
            band_variant: match cli.band {
                BandArg::Printed => BandVariant::Printed,
                BandArg::Squared => BandVariant::Squared,
            },
            mode: match cli.mode {
                ModeArg::Unit => APrimeMode::Unit,
                ModeArg::Fit => APrimeMode::Fit,
            },
            exact_prec_log: cli.exact_prec,
        },
        engine: match cli.engine {
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::Exact => Engine::Exact,
        },
        ceiling: cli.ceiling,
    };
    let format = match cli.format {
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Json => OutputFormat::Json,
    };

    let started = Instant::now();
    let (report, violation) = match cli.command {
        Command::Pi { x } => (commands::cmd_pi(x, &opts)?, false),
        Command::Table { id } => (commands::cmd_table(id, &opts)?, false),
        Command::Figure { id, limit } => (commands::cmd_figure(id, limit, &opts)?, false),
        Command::Goldbach { two_m } => (commands::cmd_goldbach(two_m, &opts)?, false),
        Command::Divisibility { n, sweep } => match (n, sweep) {
            (Some(n), None) => (commands::cmd_divisibility(n, &opts)?, false),
            (None, Some(max)) => commands::cmd_divisibility_sweep(max, &opts)?,
            _ => {
                eprintln!("divisibility takes either a single n or --sweep MAX");
                return Ok(true);
            }
        },
        Command::Gapcheck { x } => commands::cmd_gapcheck(x, &opts)?,
    };
    print!("{}", report.render(format));
    eprintln!("elapsed: {:.3?}", started.elapsed());
    Ok(violation)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.a_prime.is_nan() || cli.a_prime <= 0.0 {
        eprintln!("error: --a-prime must be positive");
        return ExitCode::FAILURE;
    }
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        // invariant violations found by a check command
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
