//! Command-line front end. Exit codes: 0 on success, 1 when a verification
//! command finds a mismatch, 2 on usage errors (including semigroup inputs
//! that do not define a semigroup).

mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nsmoduli",
    about = "Numerical semigroup invariants, binomial presentations, graded cotangent dimensions and moduli dimension bounds",
    version
)]
struct Cli {
    /// Worker threads for enumeration and scans (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

/// Selects a semigroup either by generators or by gap set.
#[derive(Args, Clone)]
struct SemigroupArg {
    /// Minimal generators, e.g. 6,7,8
    #[arg(long, value_name = "LIST", conflicts_with = "gaps")]
    gens: Option<String>,

    /// Gap set, e.g. 1,2,4,5,8
    #[arg(long, value_name = "LIST")]
    gaps: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Elementary invariants of one semigroup
    Info {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimal binomial presentation of the semigroup ideal
    Presentation {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Graded cotangent dimensions (JSON)
    T1 {
        #[command(flatten)]
        semigroup: SemigroupArg,
    },
    /// Dimension bounds of one semigroup
    Bounds {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Reproduce and verify the table of non-negatively graded semigroups of
    /// genus at most six
    Table1 {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Reproduce and verify the closed-form bound table of the three
    /// multiplicity-six families
    Table2 {
        #[arg(long, default_value_t = 5)]
        tau_max: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Bounds report for every semigroup up to a genus cap
    Scan {
        #[arg(long)]
        genus_max: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Keep only semigroups with dim T^{1,+} >= 1
        #[arg(long)]
        non_neg_graded: bool,
    },
    /// Stream all semigroups up to a genus cap, one per line
    Enumerate {
        #[arg(long)]
        genus_max: i64,
        /// Emit per-genus totals instead of the semigroups
        #[arg(long)]
        count_only: bool,
    },
    /// Family verification commands
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Syzygy verification commands
    Syzygy {
        #[command(subcommand)]
        action: SyzygyAction,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    /// Check the family closed forms against computed invariants
    Verify {
        #[arg(long, default_value_t = 5, conflicts_with = "tau")]
        tau_max: i64,
        /// Check a single parameter value instead of a range
        #[arg(long)]
        tau: Option<i64>,
        /// Restrict to one family (default: all three)
        #[arg(long)]
        family: Option<u8>,
    },
}

#[derive(Subcommand)]
enum SyzygyAction {
    /// Expand the listed syzygies and check they vanish
    Verify {
        #[arg(long)]
        family: u8,
        #[arg(long, default_value_t = 10, conflicts_with = "tau")]
        tau_max: i64,
        /// Check a single parameter value instead of a range
        #[arg(long)]
        tau: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: cannot configure {} worker threads: {e}", cli.jobs);
            return ExitCode::from(2);
        }
    }
    let sink = output::Sink::new(cli.output);
    let outcome = match cli.command {
        Command::Info { semigroup, format } => commands::info(&semigroup, format, sink),
        Command::Presentation { semigroup, format } => {
            commands::presentation(&semigroup, format, sink)
        }
        Command::T1 { semigroup } => commands::t1(&semigroup, sink),
        Command::Bounds { semigroup, format } => commands::bounds(&semigroup, format, sink),
        Command::Table1 { format } => commands::table1(format, sink),
        Command::Table2 { tau_max, format } => commands::table2(tau_max, format, sink),
        Command::Scan {
            genus_max,
            format,
            non_neg_graded,
        } => commands::scan(genus_max, format, non_neg_graded, sink),
        Command::Enumerate {
            genus_max,
            count_only,
        } => commands::enumerate(genus_max, count_only, sink),
        Command::Families {
            action: FamiliesAction::Verify {
                tau_max,
                tau,
                family,
            },
        } => commands::families_verify(commands::tau_range(tau, tau_max), family, sink),
        Command::Syzygy {
            action: SyzygyAction::Verify {
                family,
                tau_max,
                tau,
            },
        } => commands::syzygy_verify(family, commands::tau_range(tau, tau_max), sink),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
