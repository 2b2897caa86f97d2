use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use spgroups::verify::{self, RunReport};

#[derive(Parser)]
#[command(name = "spverify", version, about = "Run the registered group-theoretic checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Check id or glob, e.g. `lemma-3.1-*`.
    #[arg(long, default_value = "")]
    filter: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    include_slow: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List registered checks.
    List {
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long)]
        include_slow: bool,
    },
    /// Run checks and print a JSON report.
    Run(RunArgs),
    /// Run checks and print a report (markdown by default).
    Report(RunArgs),
}

fn emit(report: &RunReport, format: Format, out: Option<&PathBuf>) -> std::io::Result<()> {
    let text = match format {
        Format::Json => verify::to_json(report),
        Format::Markdown => verify::to_markdown(report),
    };
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(args: RunArgs, default_format: Option<Format>) -> ExitCode {
    let format = default_format.unwrap_or(args.format);
    match verify::run(&args.filter, args.seed, args.include_slow) {
        Ok(report) => {
            if let Err(e) = emit(&report, format, args.out.as_ref()) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::List { filter, include_slow } => match verify::select(&filter, include_slow) {
            Ok(entries) => {
                for e in entries {
                    println!("{:<20} {:<7} {}", e.id, format!("{:?}", e.cost).to_lowercase(), e.description);
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Run(args) => run(args, None),
        Command::Report(args) => {
            // `report` defaults to markdown unless a format was given explicitly
            let explicit = std::env::args().any(|a| a == "--format" || a.starts_with("--format="));
            run(args, (!explicit).then_some(Format::Markdown))
        }
    }
}
