use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use lrsg_cli::{run, Cli, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::UsageError.exit_code()),
            };
        }
    };
    match run(&cli) {
        Ok(result) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(result.render(cli.format).as_bytes());
            ExitCode::from(result.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::UsageError.exit_code())
        }
    }
}
