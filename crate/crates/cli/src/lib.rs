//! The `reis` command line. [`run`] does all the work and returns what the
//! binary prints, so tests can drive it in-process.
//!
//! Exit status: 0 when everything requested succeeded and every check passed,
//! 1 when a check found a mismatch, 2 for bad arguments or out-of-domain
//! parameters.

use std::ffi::OsString;
use std::time::Instant;

use clap::{CommandFactory, Parser};

pub mod args;
pub mod commands;
pub mod report;

use args::{Cli, Command, Format, ListFormat};
use commands::Outcome;
pub use report::Report;

/// Environment variable capping the number of worker threads.
pub const WORKERS_VAR: &str = "REIS_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn usage_error(message: String, subcommand: Option<&str>) -> Self {
        let mut cmd = Cli::command();
        // building fills in the full `reis <subcommand>` names
        cmd.build();
        let usage = match subcommand.and_then(|s| cmd.find_subcommand_mut(s)) {
            Some(sub) => sub.render_usage(),
            None => cmd.render_usage(),
        };
        Output { code: 2, stdout: String::new(), stderr: format!("error: {message}\n\n{usage}\n") }
    }
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Output { code: 0, stdout: rendered, stderr: String::new() }
                }
                _ if rendered.contains("Usage:") => Output { code: 2, stdout: String::new(), stderr: rendered },
                _ => {
                    let sub = argv.get(1).and_then(|s| s.to_str());
                    let message = rendered.trim_end().trim_start_matches("error: ").to_string();
                    Output::usage_error(message, sub)
                }
            };
        }
    };
    match std::env::var(WORKERS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(threads) if threads >= 1 => {
                match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                    Ok(pool) => pool.install(|| execute(&cli)),
                    Err(e) => Output::usage_error(format!("cannot start worker pool: {e}"), None),
                }
            }
            _ => Output::usage_error(format!("{WORKERS_VAR} must be a positive integer, got `{v}`"), None),
        },
        Err(_) => execute(&cli),
    }
}

fn execute(cli: &Cli) -> Output {
    let start = Instant::now();
    let (name, result, json) = match &cli.command {
        Command::Count(a) => ("count", commands::count(a), a.format == Format::Json),
        Command::Enumerate(a) => ("enumerate", commands::enumerate(a), a.format == ListFormat::Json),
        Command::Tables(a) => ("tables", commands::tables(a), a.format == Format::Json),
        Command::Verify(a) => ("verify", commands::verify(a), a.format == Format::Json),
    };
    match result {
        Ok(mut outcome) => {
            outcome.report.elapsed_ms = start.elapsed().as_millis() as u64;
            render(outcome, json)
        }
        Err(e) => Output::usage_error(e.to_string(), Some(name)),
    }
}

fn render(outcome: Outcome, json: bool) -> Output {
    let stdout = if json { format!("{}\n", outcome.report.to_json()) } else { outcome.text };
    let mut stderr = outcome.note.map(|n| format!("{n}\n")).unwrap_or_default();
    if !outcome.ok && json && stderr.is_empty() {
        stderr.push_str("mismatch found; see `matches` and `values`\n");
    }
    Output { code: if outcome.ok { 0 } else { 1 }, stdout, stderr }
}
