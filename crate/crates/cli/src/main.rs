//! `cqg`: verification suites and one-shot computations for the interval
//! quantum groups.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cqg_cli::oneshot::{self, Output};
use cqg_cli::{run_suite, CliError, Overrides, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "cqg", version, about = "Interval quantum groups: verification suites and one-shot computations")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug)]
struct Global {
    /// JSON configuration file; flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Breakpoints, comma separated (e.g. `0,1/2,1`).
    #[arg(long, global = true)]
    grid: Option<String>,
    /// Presentation: Uq, UqTilde, UhTrunc, UhTildeTrunc or ClassicalU.
    #[arg(long, global = true)]
    presentation: Option<String>,
    /// Suite to run (repeatable); all suites when absent.
    #[arg(long = "suite", global = true)]
    suites: Vec<String>,
    /// Largest n of the δ_n membership tests.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Truncation order N of the formal presentations.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Element to test in `qdp-membership` (repeatable through the config).
    #[arg(long, global = true)]
    expr: Option<String>,
    /// Print one-shot results as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the selected verification suites and emit a JSON report (default).
    Run,
    /// Normal form of an expression.
    Normalform { expr: String },
    /// Coproduct of an expression.
    Coproduct { expr: String },
    /// Antipode of an expression.
    Antipode { expr: String },
    /// δ_n membership of an expression in U′ up to the depth.
    Membership { expr: String },
    /// Classical limit of an expression.
    Limit { expr: String },
}

fn config(g: &Global) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::load(g.config.as_deref())?;
    cfg.apply(&Overrides {
        grid: g.grid.clone(),
        presentation: g.presentation.clone(),
        suites: g.suites.clone(),
        depth: g.depth,
        truncation: g.order,
        out: g.out.clone(),
        expr: g.expr.clone(),
    })?;
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let cfg = config(&cli.global)?;
    let one = |f: fn(&RunConfig, &str) -> cqg_cli::Result<Output>, expr: &str| -> Result<Output, CliError> { f(&cfg, expr) };
    let out = match &cli.command {
        None | Some(Command::Run) => {
            let report = run_suite(&cfg)?;
            let json = report.to_json();
            match &cfg.out {
                Some(path) => std::fs::write(path, json + "\n").map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
                None => println!("{json}"),
            }
            let s = &report.summary;
            eprintln!("{} checks: {} pass, {} fail, {} skipped", s.total, s.pass, s.fail, s.skipped);
            for c in report.checks.iter().filter(|c| c.status == cqg_cli::Status::Fail) {
                eprintln!("FAIL {}: {}", c.name, c.witness.as_deref().unwrap_or(""));
            }
            return Ok(report.success());
        }
        Some(Command::Normalform { expr }) => one(oneshot::normalform, expr)?,
        Some(Command::Coproduct { expr }) => one(oneshot::coproduct, expr)?,
        Some(Command::Antipode { expr }) => one(oneshot::antipode, expr)?,
        Some(Command::Limit { expr }) => one(oneshot::limit, expr)?,
        Some(Command::Membership { expr }) => {
            let out = one(oneshot::membership, expr)?;
            emit(cli, &out);
            return Ok(out.json["pass"] == true);
        }
    };
    emit(cli, &out);
    Ok(true)
}

fn emit(cli: &Cli, out: &Output) {
    if cli.global.json {
        println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
    } else {
        println!("{}", out.text);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config() { 2 } else { 1 })
        }
    }
}
