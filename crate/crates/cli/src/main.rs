use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fpure_cli::cli::{error_report, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    // a closed pipe downstream is not an error of ours
    let code = match run(&cli) {
        Ok(report) => {
            if cli.global.json {
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                for line in &report.human {
                    let _ = writeln!(out, "{line}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if cli.global.json {
                let _ = writeln!(out, "{}", error_report(&cli, &err).to_json());
            }
            ExitCode::from(err.exit_code() as u8)
        }
    };
    let _ = out.flush();
    code
}
