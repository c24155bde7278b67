use std::fmt;

use pbwt_core::{build_tables, Alphabet, PbwtBuilder, Snapshot, Sym, SENTINEL};
use thiserror::Error;

/// First disagreement between the builder and the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("step {step}: {array}[{index}] is {found}, oracle has {expected}")]
pub struct Mismatch {
    /// Number of symbols prepended so far; 0 is the sentinel-only state.
    pub step: usize,
    pub array: &'static str,
    /// 1-based row.
    pub index: usize,
    pub expected: String,
    pub found: String,
}

fn first_diff<T: PartialEq + fmt::Display>(
    step: usize,
    array: &'static str,
    found: &[T],
    expected: &[T],
) -> Result<(), Mismatch> {
    let n = found.len().max(expected.len());
    let show = |v: &[T], i: usize| v.get(i).map_or_else(|| "nothing".to_owned(), T::to_string);
    match (0..n).find(|&i| found.get(i) != expected.get(i)) {
        None => Ok(()),
        Some(i) => Err(Mismatch {
            step,
            array,
            index: i + 1,
            expected: show(expected, i),
            found: show(found, i),
        }),
    }
}

/// Feeds `body` to a fresh builder from right to left and compares the
/// builder's `L`, `F` and ∞-LCP with the oracle after every step. `tamper`
/// sees each snapshot before the comparison. Returns the number of steps.
pub fn verify_with(
    alphabet: &Alphabet,
    body: &[Sym],
    mut tamper: impl FnMut(usize, &mut Snapshot),
) -> Result<usize, Mismatch> {
    let mut builder = PbwtBuilder::new(alphabet.clone());
    let mut text = vec![SENTINEL];
    let tok = |seq: &[pbwt_core::EncSymbol]| -> Vec<String> {
        seq.iter().map(|&e| alphabet.enc_token(e)).collect()
    };
    for step in 0..=body.len() {
        if step > 0 {
            let c = body[body.len() - step];
            builder.prepend(c).expect("body symbols are valid");
            text.insert(0, c);
        }
        let mut snap = builder.snapshot();
        tamper(step, &mut snap);
        let tab = build_tables(alphabet, &text).expect("text ends with a unique sentinel");
        first_diff(step, "L", &tok(&snap.l), &tok(&tab.l))?;
        first_diff(step, "F", &tok(&snap.f), &tok(&tab.f))?;
        first_diff(step, "LCPinf", &snap.lcp_inf, &tab.lcp_inf)?;
    }
    Ok(body.len())
}

pub fn verify(alphabet: &Alphabet, body: &[Sym]) -> Result<usize, Mismatch> {
    verify_with(alphabet, body, |_, _| {})
}
