use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use diagsplit::cli::{replay_config, run, Cli};

fn main() -> ExitCode {
    match try_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn try_main() -> anyhow::Result<bool> {
    let mut cli = Cli::parse();
    if let Some(path) = cli.global.replay.take() {
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))?;
        let out = cli.global.out.take();
        cli = replay_config(&text)?;
        cli.global.out = out;
    }
    let outcome = run(&cli)?;
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    match &cli.global.out {
        Some(path) => std::fs::write(path, &outcome.text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome.passed)
}
