use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use starcolor_cli::{run, Cli, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli.command);
    let rendered = if cli.machine {
        out.report.machine()
    } else {
        out.report.text()
    };
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    // the payload owns stdout when present; the report then goes to stderr
    let result = match (&out.payload, out.outcome) {
        (Some(payload), _) => stdout
            .write_all(payload.as_bytes())
            .and_then(|_| stderr.write_all(rendered.as_bytes())),
        (None, Outcome::Usage) => stderr.write_all(rendered.as_bytes()),
        (None, _) => stdout.write_all(rendered.as_bytes()),
    };
    if result.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(out.outcome.code() as u8)
}
