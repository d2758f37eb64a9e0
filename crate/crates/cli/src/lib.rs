//! The `roughdep` command line, callable in-process.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 selection did not reach
//! the full-set value, 3 precondition failure (unknown attribute, invalid
//! fold count, enumeration cap exceeded, bad flags).

mod args;
mod commands;
mod report;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command, Common};
use commands::{Failure, Output};

/// What one invocation produced. `stdout` is empty when `--output` was given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: u8,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Measure { common, .. }
        | Command::Select { common, .. }
        | Command::Evaluate { common, .. }
        | Command::Oracle { common, .. } => common,
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Measure { common, subsets } => commands::measure(common, subsets),
        Command::Select {
            common,
            measure,
            direction,
        } => commands::select_cmd(common, *measure, *direction),
        Command::Evaluate {
            common,
            subset,
            measure,
            direction,
            k,
            seed,
        } => commands::evaluate(common, subset.as_deref(), *measure, *direction, *k, *seed),
        Command::Oracle {
            common,
            measure,
            subsets,
            cap,
        } => commands::oracle(common, *measure, subsets, *cap),
    }
}

/// Runs one command line; `args` includes the program name.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let done = |code: u8, stdout: Vec<u8>, stderr: String| Execution {
        code,
        stdout,
        stderr,
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                done(3, Vec::new(), text)
            } else {
                done(0, text.into_bytes(), String::new())
            };
        }
    };

    let output = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Io(msg)) => return done(1, Vec::new(), format!("error: {msg}\n")),
        Err(Failure::Precondition(msg)) => return done(3, Vec::new(), format!("error: {msg}\n")),
    };

    let stdout = match &common(&cli.command).output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output.text) {
                return done(1, Vec::new(), format!("error: {}: {e}\n", path.display()));
            }
            Vec::new()
        }
        None => output.text.into_bytes(),
    };
    if output.converged {
        done(0, stdout, String::new())
    } else {
        done(
            2,
            stdout,
            "warning: selection did not reach the full-set value\n".into(),
        )
    }
}
