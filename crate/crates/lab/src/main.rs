use std::io::Write;
use std::process::ExitCode;

use bohr_lab::{commands, config, Cli, UsageError};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config::resolve(cli).and_then(|(command, settings)| {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        let passed = commands::run(command, &settings, &mut lock)?;
        lock.flush()?;
        Ok(passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<UsageError>().is_some() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
