mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{exit_code, Outcome};
use output::Sink;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::Schur(a) => a.common.format,
        Command::Verify(a) => a.common.format,
        Command::Tableaux(a) | Command::Units(a) => a.common.format,
    };
    let mut sink = Sink::new(format);
    let result = match &cli.command {
        Command::Schur(a) => commands::cmd_schur(a, &mut sink),
        Command::Verify(a) => commands::cmd_verify(a, &mut sink),
        Command::Tableaux(a) => commands::cmd_tableaux(a, &mut sink),
        Command::Units(a) => commands::cmd_units(a, &mut sink),
    };
    let flushed = sink.flush();
    match (result, flushed) {
        (Ok(_), Err(e)) => {
            eprintln!("error: writing output: {e}");
            ExitCode::from(1)
        }
        (Ok(Outcome::Pass), Ok(())) => ExitCode::SUCCESS,
        (Ok(Outcome::Fail), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
