use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use pbwt_cli::{execute, Args, CliError, JobConfig};

fn run(args: &Args) -> Result<(), CliError> {
    let config = JobConfig::from_args(args)?;
    let mut out: Box<dyn Write> = match &config.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    execute(&config, &mut out)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pbwt: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
