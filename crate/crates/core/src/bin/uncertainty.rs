use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use uncertainty::cli::{run, Args, RunConfig, EXIT_ERROR};

fn main() -> ExitCode {
    let args = Args::parse();
    let result = RunConfig::try_from(args).and_then(|config| {
        let out = run(&config)?;
        if config.output_path.is_none() {
            let _ = std::io::stdout().write_all(out.document.as_bytes());
        }
        Ok(out)
    });
    match result {
        Ok(out) => {
            if let Some(w) = &out.warning {
                eprintln!("warning: {w}");
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
