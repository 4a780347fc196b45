use std::process::ExitCode;

use clap::Parser;

use psilab_cli::{config::Output, run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = RunConfig::from_cli(&cli).output;
    match run(&cli) {
        Ok(report) => {
            match output {
                Output::Json => println!("{}", report.to_json()),
                Output::Text => print!("{}", report.to_text()),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
