use std::process::ExitCode;

use clap::Parser;
use fq_incidence_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(cli.command, &cli.config) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.config.out {
        Some(path) => std::fs::write(path, &outcome.body)
            .map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{}", outcome.body);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code() as u8)
}
