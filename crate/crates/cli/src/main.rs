use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod io;

use args::Cli;
use io::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            let body = serde_json::json!({ "error": message });
            eprintln!("{}", serde_json::to_string_pretty(&body).expect("error body serializes"));
            ExitCode::from(code)
        }
    }
}
