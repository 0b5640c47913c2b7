use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = ehresmann_cli::run(std::env::args_os());
    let rendered = outcome.rendered();
    if outcome.exit_code() == 2 && !outcome.json {
        let _ = std::io::stderr().write_all(rendered.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(rendered.as_bytes());
    }
    ExitCode::from(outcome.exit_code() as u8)
}
