//! Command-line front end for `degspread-core`.
//!
//! [`run`] takes the argument vector and a standard input handle and returns
//! everything the process would print, so the whole CLI is testable in
//! process. Exit status is 0 on success, 1 when a bound or construction check
//! fails, and 2 on usage or parse errors.

pub mod args;
pub mod commands;
pub mod input;
pub mod output;
pub mod shards;

use std::ffi::OsString;
use std::io::Read;

use clap::Parser;

pub use output::OutputEnvelope;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match commands::run(&cli, stdin) {
        Ok(report) => Outcome { code: report.exit_code(), stdout: report.render(cli.format), stderr: String::new() },
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}
