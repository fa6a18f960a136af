use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lettericity_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = execute(&cli, &mut std::io::stdin().lock());
    if let Some(msg) = &run.stderr {
        eprintln!("{msg}");
    }
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(run.stdout.as_bytes());
    let _ = out.flush();
    ExitCode::from(run.status as u8)
}
