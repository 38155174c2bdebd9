use std::process::ExitCode;

use clap::Parser;
use hermitian_codes::cli::{error_exit_code, run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(&cli.config()) {
        Ok(out) => {
            eprintln!("{}", out.human);
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.json).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", out.json);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if !out.passed {
                eprintln!("verification failed; counterexample written to {}", cli.counterexample.display());
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
