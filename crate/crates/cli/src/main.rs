mod args;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use daha_core::exec::Execution;
use daha_core::jack::Memo;

use args::{Cli, Format};
use commands::{CliError, Output};

const MEMO_ENV: &str = "DAHA_JACK_MEMO_DIR";

fn main() -> ExitCode {
    // clap already exits with status 2 on malformed flags.
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    if cli.format == Format::Latex && !commands::supports_latex(&cli.command) {
        return Err(CliError::Usage("--format latex is only available for polynomial outputs".into()));
    }
    let exec = match cli.parallelism {
        Some(1) => Execution::Sequential,
        Some(t) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t as usize)
                .build_global()
                .map_err(|e| CliError::Compute(e.to_string()))?;
            Execution::Parallel
        }
        None => Execution::Parallel,
    };

    let memo_dir = std::env::var_os(MEMO_ENV).map(PathBuf::from);
    if let Some(dir) = &memo_dir {
        if dir.is_dir() {
            Memo::global().load_dir(dir)?;
        }
    }

    let out = commands::run(&cli.command, exec)?;
    emit(cli, &out)?;

    if let Some(dir) = &memo_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Compute(format!("{MEMO_ENV}: {e}")))?;
        Memo::global().save_dir(dir)?;
    }
    Ok(out.passed)
}

fn emit(cli: &Cli, out: &Output) -> Result<(), CliError> {
    let mut body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
        Format::Text => out.text.clone(),
        Format::Latex => out.latex.clone().unwrap_or_default(),
    };
    body.push('\n');
    match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Usage(format!("--out {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| CliError::Compute(e.to_string())),
    }
}
