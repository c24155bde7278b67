//! Command-line driver for the online pBWT builder: build, verify against
//! the definition-level oracle, dump per-row tables, and benchmark.
//!
//! The whole input is read into memory before construction starts. The
//! builder consumes it from right to left, so "online" describes the order
//! in which symbols are fed to the builder, not streaming IO.

pub mod bench;
pub mod config;
pub mod dump;
pub mod error;
pub mod verify;

use std::io::Write;

use pbwt_core::PbwtBuilder;
use serde::Serialize;

pub use config::{Args, Format, JobConfig, Mode};
pub use error::CliError;
pub use verify::Mismatch;

/// Runs one job, writing its result to `out`.
pub fn execute(config: &JobConfig, out: &mut dyn Write) -> Result<(), CliError> {
    match config.mode {
        Mode::Build => run_build(config, out),
        Mode::Verify => run_verify(config, out),
        Mode::Dump => run_dump(config, out),
        Mode::Bench => run_bench(config, out),
    }
}

#[derive(Serialize)]
struct BuildJson {
    n: usize,
    #[serde(rename = "L")]
    l: Vec<String>,
}

pub fn run_build(config: &JobConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let body = config.read_body()?;
    let builder = PbwtBuilder::from_text(config.alphabet.clone(), &body)
        .expect("encoded text contains only valid non-sentinel symbols");
    let al = &config.alphabet;
    let l = builder.pbwt();
    match config.format {
        Format::Tokens => writeln!(out, "{}", al.render_enc(&l))?,
        Format::Json => {
            let doc = BuildJson {
                n: builder.len(),
                l: l.iter().map(|&e| al.enc_token(e)).collect(),
            };
            serde_json::to_writer(&mut *out, &doc).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn run_verify(config: &JobConfig, out: &mut dyn Write) -> Result<(), CliError> {
    run_verify_with(config, out, |_, _| {})
}

/// [`run_verify`] with a hook that may alter each builder snapshot before it
/// is compared, for fault injection in tests.
pub fn run_verify_with(
    config: &JobConfig,
    out: &mut dyn Write,
    tamper: impl FnMut(usize, &mut pbwt_core::Snapshot),
) -> Result<(), CliError> {
    let body = config.read_capped_body()?;
    let steps = verify::verify_with(&config.alphabet, &body, tamper)?;
    match config.format {
        Format::Tokens => writeln!(out, "verified {steps} steps")?,
        Format::Json => writeln!(out, "{{\"verified\":true,\"steps\":{steps}}}")?,
    }
    Ok(())
}

pub fn run_dump(config: &JobConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let body = config.read_capped_body()?;
    let doc = dump::dump(&config.alphabet, &body);
    serde_json::to_writer_pretty(&mut *out, &doc).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn run_bench(config: &JobConfig, out: &mut dyn Write) -> Result<(), CliError> {
    bench::write_header(&mut *out)?;
    let mut failed = None;
    // Rows are written as they finish so long runs show progress.
    bench::run(&config.bench, |row| {
        if failed.is_none() {
            if let Err(e) = bench::write_row(&mut *out, row).and_then(|_| out.flush()) {
                failed = Some(e);
            }
        }
    });
    failed.map_or(Ok(()), |e| Err(e.into()))
}
