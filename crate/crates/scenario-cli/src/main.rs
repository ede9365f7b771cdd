use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use scenario_cli::{execute, Cli, Context};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli, &Context::from_env()) {
        Ok(out) => {
            print!("{}", out.stdout);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
