//! `thermolength`: command-line access to the thermodynamic length library.

mod args;
mod commands;
mod error;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, IsentropeArgs};
use error::{exit, CliError, CliResult};
use output::{Document, Format};

fn dispatch(command: Command) -> CliResult<(Document, u8)> {
    let ok = |doc| Ok((doc, exit::SUCCESS));
    match command {
        Command::Point { model, state } => ok(commands::point(&model, &state)?),
        Command::Metric { model, state } => ok(commands::metric(&model, &state)?),
        Command::Length { model, quadrature, s, v1, v2, path } => {
            let isentrope = match (s, v1, v2) {
                (Some(s), Some(v1), Some(v2)) => Some(IsentropeArgs { s, v1, v2 }),
                _ => None,
            };
            ok(commands::length(&model, &quadrature, isentrope, path.as_deref())?)
        }
        Command::Work { model, quadrature, isentrope } => ok(commands::work(&model, &quadrature, &isentrope)?),
        Command::Table { model, quadrature, s, v1, v2 } => ok(commands::table(&model, &quadrature, s, &v1, &v2)?),
        Command::Verify { model, seed, trials } => match model.resolve() {
            Ok(fixed) => {
                let report = verify::run(fixed.as_ref(), seed, trials);
                let code = if report.passed { exit::SUCCESS } else { exit::NUMERICAL };
                Ok((report.document, code))
            }
            Err(CliError::Core(e)) => Ok((verify::invalid_model(seed, trials, &e.to_string()), exit::DOMAIN)),
            Err(e) => Err(e),
        },
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::SUCCESS });
        }
    };
    let format: Format = cli.format;
    match dispatch(cli.command) {
        Ok((doc, code)) => {
            emit(&doc.render(format));
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
