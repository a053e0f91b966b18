use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "skewalg", version, about = "Exact computations in ambiskew polynomial rings and generalized Weyl algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the skew commutation and GWA power identities for m ≤ m-max.
    CheckIdentities {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        /// Random triples per property suite; 0 skips the suites.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List the closed-form exceptional λ with their scan certificates.
    Exceptional {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Find every m ≤ m-max with (u + λ)A + α^m(u + λ)A proper.
    Scan {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build the components of J(M) and check its closure.
    JmTable {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Defaults to the first closed-form exceptional value for m.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Witness the decomposition of W/J(M) into m uniform right ideals.
    Goldie {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Assemble the full spectrum report.
    Report {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Certify p_m with p_m(u) ∈ v^(m)A (bivariate for adu).
    FindPm {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Usl2,
    Uqsl2,
    Qtorus,
    Adu,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long = "example", value_enum)]
    kind: FamilyKind,
    /// Number of generators of the quantum torus (odd).
    #[arg(long, default_value_t = 3)]
    p: u32,
    /// Exponent n in u = c k^n + f(k).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    n: i32,
    /// Laurent polynomial f(k), e.g. "k^-1 + 2*k^2".
    #[arg(long, default_value = "k^-1", allow_hyphen_values = true)]
    f: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("skewalg: {e}");
            e.exit_code()
        }
    }
}
