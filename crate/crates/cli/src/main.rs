use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use katzvec_cli::{
    cmd_certify, cmd_companion, cmd_counterexample, cmd_cyclic, cmd_tables, load_module, parse_criterion, parse_norm,
    RunReport, TableFormat, DEFAULT_MAX_TABLE_RANK,
};

#[derive(Parser)]
#[command(name = "katzvec", version, about = "Exact cyclic vectors for differential modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Print the universal matrices H_0(X), ..., H_{2n-2}(X)
    Tables {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_TABLE_RANK)]
        max_n: usize,
    },
    /// Find a cyclic vector c(e, t - a) by searching constants a
    Cyclic {
        #[arg(short, long)]
        input: PathBuf,
        /// Comma-separated candidate constants (default 0, 1, ..., n(n-1))
        #[arg(long, value_delimiter = ',')]
        constants: Option<Vec<String>>,
    },
    /// Check a norm criterion over a Gauss-norm ring (exit 2 if not certified)
    Certify {
        #[arg(short, long)]
        input: PathBuf,
        /// prop2.3, prop2.5, prop2.8 or lemma2.1
        #[arg(long)]
        criterion: String,
        /// sup, rho-t or rho-d
        #[arg(long)]
        norm: Option<String>,
    },
    /// Scalar equation y^(n) = sum b_k y^(k) in a cyclic basis
    Companion {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Check that F_q[x]^n with the trivial connection has no cyclic vector for n > q
    Counterexample {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        e: u32,
        #[arg(short)]
        n: usize,
    },
}

fn run(cli: Cli) -> anyhow::Result<RunReport> {
    match cli.command {
        Command::Tables { n, format, max_n } => {
            let format = match format {
                Format::Json => TableFormat::Json,
                Format::Latex => TableFormat::Latex,
            };
            cmd_tables(n, format, max_n)
        }
        Command::Cyclic { input, constants } => cmd_cyclic(&load_module(&input)?, constants.as_deref()),
        Command::Certify { input, criterion, norm } => {
            let criterion = parse_criterion(&criterion)?;
            let norm = norm.as_deref().map(parse_norm).transpose()?;
            cmd_certify(&load_module(&input)?, criterion, norm)
        }
        Command::Companion { input } => cmd_companion(&load_module(&input)?),
        Command::Counterexample { p, e, n } => cmd_counterexample(p, e, n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render().as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(report.exit_status as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
