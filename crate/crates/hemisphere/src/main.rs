use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hemisphere::{run, Cli, RunConfig, RunError};

fn main() -> ExitCode {
    let cfg = RunConfig::from(Cli::parse());
    match run(&cfg).and_then(|text| write_output(&cfg, &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn write_output(cfg: &RunConfig, text: &str) -> Result<(), RunError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
