use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use chevalley::{Root, SimpleType};
use chevalley_verify::{
    cmd_property_suite, cmd_setup_report, cmd_sl2_table, cmd_verify_g2, cmd_verify_minimal_orbits,
    run_all, CheckResult, Report, VerifyError, MAX_RANK,
};
use clap::{Parser, Subcommand, ValueEnum};

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "verify",
    version,
    about = "Exact checks on Chevalley-basis Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Stabilizers of the short simple root orbit of G2.
    G2,
    /// Gauss-fiber dimension at a highest root vector, for every type.
    MinimalOrbits {
        #[arg(long, default_value_t = MAX_RANK)]
        max_rank: usize,
    },
    /// String-length classification of sl2(α) for every simple root.
    Sl2Table {
        #[arg(long, default_value_t = MAX_RANK)]
        max_rank: usize,
    },
    /// Seeded randomized property suites on types of rank at most 4.
    Props {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
    },
    /// Identity ledger for h = sl2(α) and s = h_α.
    Setup {
        #[arg(long = "type")]
        simple_type: SimpleType,
        /// Simple root in coordinates, e.g. "[1,0]".
        #[arg(long)]
        alpha: Root,
    },
    /// g2, minimal-orbits, sl2-table and props with default arguments.
    All {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
    },
}

fn run(command: Command) -> Result<Vec<CheckResult>, VerifyError> {
    Ok(match command {
        Command::G2 => vec![cmd_verify_g2()],
        Command::MinimalOrbits { max_rank } => cmd_verify_minimal_orbits(max_rank)?,
        Command::Sl2Table { max_rank } => cmd_sl2_table(max_rank)?,
        Command::Props { seed, trials } => cmd_property_suite(seed, trials as usize),
        Command::Setup { simple_type, alpha } => vec![cmd_setup_report(simple_type, &alpha)?],
        Command::All { seed, trials } => run_all(seed, trials as usize),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let checks = match run(cli.command) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let report = Report::new(checks);
    let json = report.to_json();
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(USAGE_ERROR);
        }
    }
    match cli.format {
        Format::Json => print!("{json}"),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.any_failed() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
