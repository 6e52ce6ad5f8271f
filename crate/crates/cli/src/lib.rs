//! Command-line front end for `pinnacle-core`.

pub mod config;
pub mod grammar;
pub mod run;

use std::ffi::OsString;

use clap::Parser;

pub use config::{Cli, CliConfig, Command, Format, BUDGET_ENV};
pub use grammar::{format_perm, format_set, format_value, parse_colored_token, parse_perm, parse_set, ParseError};
pub use run::{exit_code, run, run_with_counter, Counter, Outcome, EXIT_BUDGET, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};

/// Parses arguments into a validated config, or the outcome to report instead.
pub fn configure<I, T>(args: I) -> Result<CliConfig, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        let rendered = e.render().to_string();
        if e.use_stderr() {
            Outcome {
                code: EXIT_INVALID,
                stdout: String::new(),
                stderr: rendered,
            }
        } else {
            // --help and --version
            Outcome {
                code: EXIT_OK,
                stdout: rendered,
                stderr: String::new(),
            }
        }
    })?;
    CliConfig::try_from(cli).map_err(|e| Outcome {
        code: EXIT_INVALID,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

/// Full invocation: parse, run, and write data to `--output` if given.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match configure(args) {
        Ok(c) => c,
        Err(outcome) => return outcome,
    };
    let mut outcome = run(&config);
    if let Some(path) = &config.output {
        if let Err(e) = std::fs::write(path, &outcome.stdout) {
            outcome
                .stderr
                .push_str(&format!("error: cannot write {}: {e}\n", path.display()));
            outcome.code = EXIT_INVALID;
        }
        outcome.stdout.clear();
    }
    outcome
}
