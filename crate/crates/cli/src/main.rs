use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use spinchain_cli::{configure_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = std::env::var("SPINCHAIN_THREADS").ok();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = configure_threads(threads.as_deref()).and_then(|()| run(&cli, &mut out));
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("spinchain: {e}");
            ExitCode::from(e.code)
        }
    }
}
