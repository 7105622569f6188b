//! `uniscript` command-line tool: one subcommand per toolkit stage.

mod commands;

use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};

use commands::Failure;

#[derive(Debug, Parser)]
#[command(name = "uniscript", about = "Brahmic-script corpus, tokenizer and evaluation toolkit", arg_required_else_help = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, clap::Args)]
pub struct GlobalArgs {
    /// Read input from FILE instead of standard input.
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<std::path::PathBuf>,
    /// Write data to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<std::path::PathBuf>,
    /// More diagnostics on standard error (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    /// Only report errors.
    #[arg(short, long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-line script histogram and dominant script (JSON lines).
    Detect,
    /// Romanize Brahmic text to ISO 15919, line by line.
    Translit(commands::TranslitArgs),
    /// Filter a JSONL corpus by script, normalize and optionally romanize it.
    Filter(commands::FilterArgs),
    /// Train a subword vocabulary on whitespace-delimited words.
    BpeTrain(commands::BpeTrainArgs),
    /// Fertility and unbroken-word ratio of a corpus under a vocabulary.
    TokMetrics(commands::TokMetricsArgs),
    /// Mann-Whitney U test with effect sizes, for two groups or a batch table.
    Mwu(commands::MwuArgs),
    /// Pairwise per-layer linear CKA between languages.
    Cka(commands::CkaArgs),
}

fn version() -> String {
    format!("{} (Unicode tables {})", env!("CARGO_PKG_VERSION"), uniscript::UNICODE_VERSION)
}

fn main() -> ExitCode {
    let matches = match Cli::command().version(version()).try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };

    let level = match (cli.global.quiet, cli.global.verbose) {
        (true, _) => log::LevelFilter::Error,
        (false, 0) => log::LevelFilter::Warn,
        (false, 1) => log::LevelFilter::Info,
        (false, _) => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).parse_env("UNISCRIPT_LOG").init();

    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
