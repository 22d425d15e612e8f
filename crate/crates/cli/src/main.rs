mod args;
mod commands;
mod error;
mod table;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Output};
use commands::Report;
use error::CliError;
use table::emit;

fn execute(cli: &Cli) -> Result<(Report, &Output), CliError> {
    Ok(match &cli.command {
        Command::Reflect(a) => (commands::reflect(a)?, &a.output),
        Command::Converge(a) => (commands::converge(a)?, &a.output),
        Command::Evolve(a) => (commands::evolve(a)?, &a.output),
        Command::Oracle(a) => (commands::oracle(a)?, &a.output),
    })
}

fn write(report: &Report, output: &Output) -> Result<(), CliError> {
    // render everything before touching the filesystem
    let main = report.table.render(output.format)?;
    let extra = match &report.extra {
        Some((path, table)) => Some((path, table.render(output.format)?)),
        None => None,
    };
    emit(&main, output.out.as_deref())?;
    if let Some((path, bytes)) = extra {
        emit(&bytes, Some(path))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|(report, output)| write(&report, output).map(|_| report.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("halfwall: check failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("halfwall: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
