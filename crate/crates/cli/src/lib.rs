//! Command-line front end for `hypvol-core`.

pub mod angle;
pub mod commands;
pub mod output;
pub mod spec_file;
pub mod tables;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{exit_code, Cli};

/// Parses arguments, runs the command and writes its output; returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let doc = match commands::execute(&cli) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("hypvol: {e}");
            return exit_code(&e);
        }
    };
    match output::render(&doc, cli.format, cli.digits as usize) {
        Ok(text) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            0
        }
        Err(e) => {
            eprintln!("hypvol: cannot write output: {e}");
            4
        }
    }
}
