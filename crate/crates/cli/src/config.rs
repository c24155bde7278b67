use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use pbwt_core::{Alphabet, Sym};

use crate::bench::BenchConfig;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Build,
    Verify,
    Dump,
    Bench,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tokens,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "pbwt",
    version,
    about = "Online parameterized BWT construction"
)]
pub struct Args {
    /// Input text file; standard input when omitted.
    pub input: Option<PathBuf>,

    /// Static symbols, in order. The sentinel is added if missing.
    #[arg(long, default_value = "")]
    pub sigma: String,

    /// Parameter symbols, in order.
    #[arg(long, default_value = "")]
    pub pi: String,

    #[arg(long, default_value_t = '$')]
    pub sentinel: char,

    #[arg(long, value_enum, default_value_t = Mode::Build)]
    pub mode: Mode,

    /// Longest input accepted by verify and dump.
    #[arg(long, default_value_t = 5000)]
    pub max_verify_len: usize,

    #[arg(long, value_enum, default_value_t = Format::Tokens)]
    pub format: Format,

    /// Seed for the synthetic bench texts.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,

    /// Bench: smallest text length, as a power of two.
    #[arg(long, default_value_t = 10)]
    pub min_log2: u32,

    /// Bench: largest text length, as a power of two.
    #[arg(long, default_value_t = 20)]
    pub max_log2: u32,

    /// Bench: number of parameter symbols for the length sweep.
    #[arg(long, default_value_t = 4)]
    pub bench_pi: usize,

    /// Bench: number of non-sentinel statics.
    #[arg(long, default_value_t = 2)]
    pub bench_sigma: usize,

    /// Bench: comma-separated parameter alphabet sizes for the fixed-length
    /// sweep; empty to skip it.
    #[arg(long, default_value = "1,2,4,8,16")]
    pub pi_sweep: String,

    /// Bench: text length, as a power of two, for the parameter sweep.
    #[arg(long, default_value_t = 16)]
    pub sweep_log2: u32,
}

fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("not a size: {t:?}")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Stdin,
    File(PathBuf),
    /// In-memory text, for library callers.
    Text(String),
}

/// A validated job.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub input: Input,
    pub alphabet: Alphabet,
    pub mode: Mode,
    pub format: Format,
    pub max_verify_len: usize,
    pub output: Option<PathBuf>,
    pub bench: BenchConfig,
}

impl JobConfig {
    pub fn from_args(args: &Args) -> Result<Self, CliError> {
        let alphabet = Alphabet::new(args.sentinel, args.sigma.chars(), args.pi.chars())?;
        Ok(JobConfig {
            input: args.input.clone().map_or(Input::Stdin, Input::File),
            alphabet,
            mode: args.mode,
            format: args.format,
            max_verify_len: args.max_verify_len,
            output: args.output.clone(),
            bench: BenchConfig {
                min_log2: args.min_log2,
                max_log2: args.max_log2,
                sigma: args.bench_sigma,
                pi: args.bench_pi,
                pi_sweep: parse_list(&args.pi_sweep)?,
                sweep_log2: args.sweep_log2,
                seed: args.seed,
            },
        })
    }

    /// Builds a job over in-memory text with every other setting at its
    /// default.
    pub fn for_text(alphabet: Alphabet, mode: Mode, text: &str) -> Self {
        JobConfig {
            input: Input::Text(text.to_owned()),
            alphabet,
            mode,
            format: Format::Tokens,
            max_verify_len: 5000,
            output: None,
            bench: BenchConfig::default(),
        }
    }

    /// Reads the input with one trailing newline removed.
    pub fn read_text(&self) -> Result<String, CliError> {
        let mut text = match &self.input {
            Input::Text(t) => t.clone(),
            Input::File(path) => fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.display().to_string(),
                source,
            })?,
            Input::Stdin => {
                let mut t = String::new();
                io::stdin()
                    .read_to_string(&mut t)
                    .map_err(|source| CliError::Read {
                        path: "<stdin>".into(),
                        source,
                    })?;
                t
            }
        };
        if text.ends_with('\n') {
            text.pop();
            if text.ends_with('\r') {
                text.pop();
            }
        }
        Ok(text)
    }

    /// The input as symbol codes, without the sentinel.
    pub fn read_body(&self) -> Result<Vec<Sym>, CliError> {
        Ok(self.alphabet.encode_body(&self.read_text()?)?)
    }

    /// Like [`JobConfig::read_body`], refusing inputs over the verify cap.
    pub fn read_capped_body(&self) -> Result<Vec<Sym>, CliError> {
        let body = self.read_body()?;
        if body.len() > self.max_verify_len {
            return Err(CliError::TooLong {
                len: body.len(),
                max: self.max_verify_len,
            });
        }
        Ok(body)
    }
}
