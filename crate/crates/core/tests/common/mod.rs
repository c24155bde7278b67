#![allow(dead_code)]

use pbwt_core::{Alphabet, Sym, SENTINEL};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random alphabet with 1..=max_sigma statics (sentinel included) and
/// 1..=max_pi parameters.
pub fn random_alphabet(rng: &mut impl Rng, max_sigma: usize, max_pi: usize) -> Alphabet {
    let statics = rng.gen_range(0..max_sigma);
    let params = rng.gen_range(1..=max_pi);
    Alphabet::new(
        '$',
        "abcdefgh".chars().take(statics),
        "uvwxyzpq".chars().take(params),
    )
    .unwrap()
}

/// Random body (no sentinel) of exactly `len` symbols.
pub fn random_body(rng: &mut impl Rng, alphabet: &Alphabet, len: usize) -> Vec<Sym> {
    let choices = alphabet.symbol_count() as u32 - 1;
    (0..len).map(|_| Sym(rng.gen_range(1..=choices))).collect()
}

pub fn terminated(body: &[Sym]) -> Vec<Sym> {
    let mut t = body.to_vec();
    t.push(SENTINEL);
    t
}
