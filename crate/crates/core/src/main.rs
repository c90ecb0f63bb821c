use std::process::ExitCode;

use bei_core::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match run(&cli, argv) {
        Ok(report) => {
            if cli.options.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render());
            }
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
