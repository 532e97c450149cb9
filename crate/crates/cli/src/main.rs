use std::io::Write;
use std::process::ExitCode;

use annigraph_cli::{run, Cli, CliError};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.into_config().and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.out_path {
            Some(path) => std::fs::write(path, &outcome.output)?,
            None => std::io::stdout().write_all(outcome.output.as_bytes())?,
        }
        Ok::<_, CliError>(outcome.status)
    }) {
        Ok(status) => ExitCode::from(status.exit_code()),
        Err(e) => {
            eprintln!("annigraph: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
