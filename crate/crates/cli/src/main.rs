//! `cig`: Cayley digraphs, CI tests and quotient certificates from the
//! command line.
//!
//! Exit status: 0 when a query completes or a certificate is accepted, 1
//! when a certificate is rejected or a non-CI witness is found, 2 on usage
//! and validation errors.

mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use config::{Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("warning: could not configure the thread pool: {e}");
        }
    }
    match commands::run(&cli) {
        Ok(report) => {
            // A closed stdout (e.g. piping into `head`) is not an error.
            let mut out = std::io::stdout().lock();
            let _ = match cli.format {
                Format::Human => out.write_all(report.human.as_bytes()),
                Format::Json => {
                    let doc = serde_json::json!({
                        "tool": "cig",
                        "version": cig_core::VERSION,
                        "config": report.config,
                        "result": report.result,
                    });
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("reports serialize")
                    )
                }
            };
            ExitCode::from(report.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
