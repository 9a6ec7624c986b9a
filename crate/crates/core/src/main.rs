use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sparkchar::report::{
    cmd_cech, cmd_fuzz, cmd_product, CechOp, CliError, FuzzSuite, OutputFormat, ProductMode,
};

/// Exact products of circle-valued differential characters, with Čech
/// utilities and seeded property suites.
#[derive(Parser)]
#[command(name = "sparkchar", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, default_value = "text", value_parser = parse_output)]
    output: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two degree-0 classes given as spark files.
    Product {
        /// Left factor (JSON spark file).
        #[arg(long)]
        lhs: PathBuf,
        /// Right factor (JSON spark file).
        #[arg(long)]
        rhs: PathBuf,
        /// Pipeline: closed, engine, deligne, or all.
        #[arg(long, default_value = "all")]
        mode: ProductMode,
        /// Cross-check against Gauss–Legendre quadrature.
        #[arg(long = "check-oracle")]
        check_oracle: bool,
        /// Oracle tolerance (circle distance).
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Run a seeded property suite.
    Fuzz {
        /// Suite: leibniz, assoc, commut, roundtrip, or agreement.
        suite: FuzzSuite,
        #[arg(long, default_value_t = 100)]
        cases: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Čech operations over nerve/cochain files.
    Cech {
        /// Operation: delta, cup, or flat-product.
        op: CechOp,
        #[arg(long)]
        nerve: PathBuf,
        /// Cochain file (repeatable).
        #[arg(long = "cochain")]
        cochains: Vec<PathBuf>,
        /// Cycle file for flat-product.
        #[arg(long)]
        cycle: Option<PathBuf>,
    },
}

fn parse_output(s: &str) -> Result<OutputFormat, String> {
    match s {
        "text" => Ok(OutputFormat::Text),
        "json" => Ok(OutputFormat::Json),
        other => Err(format!("unknown output format {other:?} (use text|json)")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Product {
            lhs,
            rhs,
            mode,
            check_oracle,
            tol,
        } => cmd_product(lhs, rhs, *mode, *check_oracle, *tol),
        Command::Fuzz { suite, cases, seed } => cmd_fuzz(*suite, *cases, *seed),
        Command::Cech {
            op,
            nerve,
            cochains,
            cycle,
        } => cmd_cech(nerve, cochains, *op, cycle.as_deref()),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.output));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
