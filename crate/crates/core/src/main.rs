use clap::Parser;
use horizon_spectra::cli::{self, Cli, EXIT_ERROR};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    let result = cli::run(cli).and_then(|outcome| Ok((outcome.emit()?, outcome.exit)));
    match result {
        Ok((text, code)) => {
            if let Some(text) = text {
                let mut stdout = std::io::stdout().lock();
                if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                    eprintln!("horizon-spectra: stdout: {e}");
                    return ExitCode::from(EXIT_ERROR);
                }
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("horizon-spectra: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
