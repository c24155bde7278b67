use std::io::{self, Write};
use std::time::Instant;

use pbwt_core::{Alphabet, PbwtBuilder, Sym};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub min_log2: u32,
    pub max_log2: u32,
    /// Non-sentinel statics in the synthetic alphabet.
    pub sigma: usize,
    /// Parameters for the length sweep.
    pub pi: usize,
    /// Parameter counts for the sweep at fixed length; empty to skip it.
    pub pi_sweep: Vec<usize>,
    pub sweep_log2: u32,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            min_log2: 10,
            max_log2: 20,
            sigma: 2,
            pi: 4,
            pi_sweep: vec![1, 2, 4, 8, 16],
            sweep_log2: 16,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub pi_size: usize,
    pub total_seconds: f64,
    pub ns_per_char: f64,
}

/// Uniform random text over the statics and parameters of `alphabet`.
pub fn synthetic_text(alphabet: &Alphabet, len: usize, seed: u64) -> Vec<Sym> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = alphabet.symbol_count() as u32 - 1;
    (0..len).map(|_| Sym(rng.gen_range(1..=top))).collect()
}

/// Times a full right-to-left construction of a random text of length `n`.
pub fn measure(n: usize, sigma: usize, pi: usize, seed: u64) -> BenchRow {
    let alphabet = Alphabet::with_sizes(sigma, pi);
    let text = synthetic_text(&alphabet, n, seed);
    let start = Instant::now();
    let mut builder = PbwtBuilder::new(alphabet);
    for &c in text.iter().rev() {
        builder.prepend(c).expect("synthetic symbols are valid");
    }
    let total = start.elapsed().as_secs_f64();
    std::hint::black_box(&builder);
    BenchRow {
        n,
        pi_size: pi,
        total_seconds: total,
        ns_per_char: total * 1e9 / n.max(1) as f64,
    }
}

/// Length sweep over `2^min_log2 ..= 2^max_log2`, then the parameter sweep.
/// `on_row` is called as each row finishes.
pub fn run(config: &BenchConfig, mut on_row: impl FnMut(&BenchRow)) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    let mut push = |row: BenchRow| {
        on_row(&row);
        rows.push(row);
    };
    for k in config.min_log2..=config.max_log2 {
        push(measure(1 << k, config.sigma, config.pi, config.seed));
    }
    for &pi in &config.pi_sweep {
        push(measure(
            1 << config.sweep_log2,
            config.sigma,
            pi,
            config.seed,
        ));
    }
    rows
}

pub fn write_header(out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "n\tpi_size\ttotal_seconds\tns_per_char")
}

pub fn write_row(out: &mut dyn Write, row: &BenchRow) -> io::Result<()> {
    writeln!(
        out,
        "{}\t{}\t{:.6}\t{:.1}",
        row.n, row.pi_size, row.total_seconds, row.ns_per_char
    )
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
