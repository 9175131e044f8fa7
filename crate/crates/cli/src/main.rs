//! `frieze`: glue, check and take determinants of weak friezes described in
//! JSON polygon files.
//!
//! Exit status is 0 on success, 1 when a check fails and 2 on bad input.

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Weak friezes on dissected polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Polygon file; `-` reads standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CheckKind {
    /// Ptolemy relations crossing the file's dissection.
    #[arg(long)]
    weak: bool,
    /// All Ptolemy relations.
    #[arg(long)]
    full: bool,
    /// The generalized diamond rule on the frieze matrix.
    #[arg(long)]
    diamond: bool,
    /// The overlap identity on the frieze matrix.
    #[arg(long)]
    overlap: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check relations on a frieze.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        kind: CheckKind,
    },
    /// Glue the pieces of a polygon file into one frieze.
    Glue {
        #[command(flatten)]
        input: Input,
        /// Output file; standard output if omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Determinant of the frieze matrix.
    Det {
        #[command(flatten)]
        input: Input,
        /// Compare with the factorization along a diagonal, e.g. `d=1,4`.
        #[arg(long, value_name = "d=A,B")]
        factor: Option<String>,
    },
    /// Print rows of the frieze pattern.
    Render {
        #[command(flatten)]
        input: Input,
        /// Inclusive row range, e.g. `1..8`.
        #[arg(long, value_name = "I..J", allow_hyphen_values = true)]
        rows: String,
    },
    /// Print the frieze matrix.
    Matrix {
        #[command(flatten)]
        input: Input,
    },
    /// Known families and their closed-form determinants.
    #[command(subcommand)]
    Gallery(Gallery),
}

#[derive(Subcommand)]
pub enum Gallery {
    /// Constant-1 cells of the given sizes glued in a fan.
    Bhj {
        /// Expected polygon size; derived from the cells if omitted.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated cell sizes, e.g. `4,4,4`.
        #[arg(long, value_delimiter = ',', required = true)]
        cells: Vec<usize>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Conway–Coxeter frieze of a random triangulation.
    Cc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Symbolic cluster-variable frieze of a random triangulation.
    Bm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Cluster-variable frieze evaluated at a random point, checked as a
    /// frieze matrix with coefficients.
    Maldonado {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Random weak frieze on a random dissection.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Use a triangulation.
        #[arg(long)]
        triangulation: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { input, kind } => {
            let k = if kind.weak {
                commands::CheckKind::Weak
            } else if kind.full {
                commands::CheckKind::Full
            } else if kind.diamond {
                commands::CheckKind::Diamond
            } else {
                commands::CheckKind::Overlap
            };
            commands::check(&input.input, k)
        }
        Command::Glue { input, out } => commands::glue(&input.input, out.as_deref()),
        Command::Det { input, factor } => commands::det(&input.input, factor.as_deref()),
        Command::Render { input, rows } => commands::render(&input.input, &rows),
        Command::Matrix { input } => commands::matrix(&input.input),
        Command::Gallery(g) => commands::gallery(g),
    };
    match result {
        Ok(commands::Status::Pass) => ExitCode::SUCCESS,
        Ok(commands::Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
