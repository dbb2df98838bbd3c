use std::process::ExitCode;

use clap::Parser;
use smbraid::cli::{run, Cli};

fn main() -> ExitCode {
    if let Some(threads) = std::env::var("SMBRAID_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.output);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
