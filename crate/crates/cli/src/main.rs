use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jetalg_cli::{build, check, enumerate, load, schur, Document, InputError, Params, Report, SchurCommand};

#[derive(Parser)]
#[command(
    name = "jetalg",
    version,
    about = "Verify and build graded-manifold constructions from TOML documents"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of a document.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a construction and verify its output.
    Build {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        construction: String,
        /// Construction parameters, e.g. `q=2` or `k=1,n=1`.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Enumerate pointed maps from a pair groupoid by horn filling.
    Enumerate {
        #[arg(long)]
        input: PathBuf,
        /// Size of the pointed set, basepoint included.
        #[arg(long)]
        set_size: usize,
    },
    /// Young-diagram computations.
    Schur {
        #[arg(value_enum)]
        subcommand: SchurCommand,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Truncation degree for `omega2`.
        #[arg(long)]
        degree: Option<usize>,
        /// Parameters such as `n=2,parity=odd` or `k=1,n=1`.
        #[arg(long, default_value = "")]
        params: String,
    },
}

fn load_opt(path: &Option<PathBuf>) -> Result<Option<Document>, InputError> {
    path.as_deref().map(load).transpose()
}

fn run(cli: &Cli) -> Result<Report, InputError> {
    match &cli.command {
        Command::Check { input } => check(&load(input)?),
        Command::Build {
            input,
            construction,
            params,
        } => build(load_opt(input)?.as_ref(), construction, &Params::parse(params)?),
        Command::Enumerate { input, set_size } => enumerate(&load(input)?, *set_size),
        Command::Schur {
            subcommand,
            input,
            degree,
            params,
        } => schur(load_opt(input)?.as_ref(), *subcommand, *degree, &Params::parse(params)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Structured => report.to_json() + "\n",
            };
            // a closed pipe downstream is not a failure of the run
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
