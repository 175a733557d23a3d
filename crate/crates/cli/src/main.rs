use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use rattrig_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    if let Err(e) = &outcome.status {
        eprintln!("error: {e}");
    }
    ExitCode::from(outcome.exit_code() as u8)
}
