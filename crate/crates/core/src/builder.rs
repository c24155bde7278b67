//! Online pBWT construction, reading the text from right to left.
//!
//! The builder holds the state for a text `S` that ends with the sentinel and
//! turns it into the state for `cS` in [`PbwtBuilder::prepend`]:
//!
//! 1. rewrite the few rows of `L` and `F` whose encoding changes when `c` is
//!    put in front (only rows ending in the rightmost occurrence of some
//!    parameter, plus the `$` row);
//! 2. find the rank `k_T` of the new full-length rotation and insert its
//!    first and last symbols there;
//! 3. recompute the two ∞-LCP entries around the new row.
//!
//! Besides `L`, `F` and the ∞-LCP array the state keeps, per parameter, its
//! leftmost and rightmost occurrence counted from the right end of the text
//! and the row of `L` holding its rightmost occurrence, and a run-length
//! string `C` over the statics that answers "how many statics smaller than
//! `x` occur" with one select. Neither the rotation array nor the LF table is
//! stored; LF is evaluated with rank/select on `L` and `F`.
//!
//! Each prepend does `O(|Π|)` rank/select calls on the sequences, so the
//! cost per symbol is `O(|Π| log n)` with [`DynSeq`]. The construction does
//! not depend on `|Σ| <= |T|`.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::alphabet::{Alphabet, EncSymbol, Sym, SENTINEL};
use crate::dynseq::{DynSeq, DynSeqError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("the sentinel cannot be prepended")]
    SentinelPrepend,
    #[error("symbol code {0} is outside the alphabet")]
    UnknownSymbol(u32),
    #[error("row {row} out of range for {n} rows")]
    RowOutOfRange { row: usize, n: usize },
}

/// Plain copies of the maintained columns, for comparison and output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub n: usize,
    pub l: Vec<EncSymbol>,
    pub f: Vec<EncSymbol>,
    pub lcp_inf: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PbwtBuilder {
    alphabet: Alphabet,
    n: usize,
    l: DynSeq,
    f: DynSeq,
    /// Leftmost occurrence of each parameter counted from the right end, 0 if absent.
    left: Vec<usize>,
    /// Rightmost occurrence of each parameter counted from the right end, 0 if absent.
    right: Vec<usize>,
    /// Row of `L` that holds each parameter's rightmost occurrence, 0 if absent.
    rm: Vec<usize>,
    c: DynSeq,
    lcp: DynSeq,
}

// Failures here mean the state is corrupt, not that the caller erred.
fn ok<T>(r: Result<T, DynSeqError>) -> T {
    r.expect("builder invariant violated")
}

impl PbwtBuilder {
    /// State for the text consisting of the sentinel alone.
    pub fn new(alphabet: Alphabet) -> Self {
        let sigma = alphabet.sigma_size();
        let pi = alphabet.pi_size();
        let enc = alphabet.enc_alphabet_size();
        let mut l = DynSeq::new(enc);
        let mut f = DynSeq::new(enc);
        ok(l.insert(SENTINEL.0, 1));
        ok(f.insert(SENTINEL.0, 1));
        let mut c = DynSeq::new(sigma);
        ok(c.insert(SENTINEL.0, 1));
        for s in 0..sigma as u32 {
            ok(c.insert(s, c.len() + 1));
        }
        let mut lcp = DynSeq::new(pi + 1);
        ok(lcp.insert(0, 1));
        PbwtBuilder {
            alphabet,
            n: 1,
            l,
            f,
            left: vec![0; pi],
            right: vec![0; pi],
            rm: vec![0; pi],
            c,
            lcp,
        }
    }

    /// Builds the state for `text` followed by the sentinel, prepending the
    /// symbols of `text` from last to first.
    pub fn from_text(alphabet: Alphabet, text: &[Sym]) -> Result<Self, BuildError> {
        let mut b = PbwtBuilder::new(alphabet);
        for &c in text.iter().rev() {
            b.prepend(c)?;
        }
        Ok(b)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Length of the current text, sentinel included.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Prepends `c` and returns the row `k_T` at which the new full-length
    /// rotation was inserted.
    pub fn prepend(&mut self, c: Sym) -> Result<usize, BuildError> {
        if c == SENTINEL {
            return Err(BuildError::SentinelPrepend);
        }
        if c.0 as usize >= self.alphabet.symbol_count() {
            return Err(BuildError::UnknownSymbol(c.0));
        }
        let k = ok(self.l.select(SENTINEL.0, 1));
        self.update_lf(c, k);
        let kt = self.insert_row(k);
        for row in self.rm.iter_mut() {
            if *row >= kt {
                *row += 1;
            }
        }
        let x = self.update_lcp(kt, kt);
        let before = self.update_lcp(kt - 1, kt);
        ok(self.lcp.replace(kt - 1, before as u32));
        ok(self.lcp.insert(x as u32, kt));
        self.n += 1;
        Ok(kt)
    }

    fn enc(&self, code: u32) -> EncSymbol {
        self.alphabet.enc_from_code(code)
    }

    /// Sequence code of count `v`.
    fn count_code(&self, v: usize) -> u32 {
        (self.alphabet.sigma_size() + v - 1) as u32
    }

    fn rank_count(&self, v: usize, i: usize) -> usize {
        ok(self.l.rank(self.count_code(v), i))
    }

    /// Turns `L_S`, `F_S` into the intermediate columns of `cS` over the old
    /// row order, and updates the occurrence tables for `c`.
    fn update_lf(&mut self, c: Sym, k: usize) {
        let Some(ci) = self.alphabet.param_index(c) else {
            ok(self.l.replace(k, c.0));
            return;
        };

        // Each rewritten row belongs to a different parameter. All rows and
        // their LF targets are read before any write so that every LF is
        // evaluated on L_S and F_S.
        let mut rewrites = Vec::new();
        for a in 0..self.alphabet.pi_size() {
            if self.left[a] == 0 {
                continue;
            }
            let i = self.rm[a];
            let code = ok(self.l.access(i));
            let j = ok(self.f.select(code, ok(self.l.rank(code, i))));
            let old = self.enc(code).count().expect("RM row holds a parameter") as usize;
            let cnt = if a == ci {
                // Distinct parameters to the right of c's rightmost
                // occurrence, plus c itself.
                (0..self.alphabet.pi_size())
                    .filter(|&b| self.left[b] != 0 && self.right[b] <= self.right[a])
                    .count()
            } else if self.left[ci] == 0
                || (self.left[a] > self.left[ci]
                    && self.left[ci] >= self.right[ci]
                    && self.right[ci] > self.right[a])
            {
                old + 1
            } else {
                old
            };
            rewrites.push((i, j, self.count_code(cnt)));
        }
        for (i, j, code) in rewrites {
            ok(self.l.replace(i, code));
            ok(self.f.replace(j, code));
        }

        let n = self.n;
        let cnt = if self.left[ci] == 0 {
            let occurring = self.left.iter().filter(|&&p| p != 0).count();
            self.left[ci] = n + 1;
            self.right[ci] = n + 1;
            self.rm[ci] = k;
            1 + occurring
        } else {
            let lc = self.left[ci];
            let cnt = 1 + self.left.iter().filter(|&&p| p > lc).count();
            self.left[ci] = n + 1;
            cnt
        };
        ok(self.l.replace(k, self.count_code(cnt)));
    }

    /// Finds `k_T` and inserts `$` into `L` and the new first symbol into `F`
    /// there. `L[k]` holds the first symbol of the new text's encoding.
    fn insert_row(&mut self, k: usize) -> usize {
        let n = self.n;
        let x = ok(self.l.access(k));
        let kt = match self.enc(x) {
            EncSymbol::Static(s) => {
                let first = ok(self.c.select(s.0, 1));
                // Statics below s in C: |S|_{Σ<s} plus one padding copy each.
                let kt = first - s.0 as usize - 1 + ok(self.l.rank(s.0, k));
                ok(self.c.insert(s.0, first));
                kt
            }
            EncSymbol::Count(xv) => {
                let xv = xv as usize;
                let pi = self.alphabet.pi_size();
                let mut kt = 1 + self.c.len() - self.alphabet.sigma_size();

                // Rows above k whose last symbol is a count no larger than x.
                for y in 1..=xv {
                    kt += self.rank_count(y, k - 1);
                }

                // Rows above k sharing fewer than x infinities with row k
                // form the prefix 1..=j; count the ones ending in a count > x.
                let mut j = 0;
                for y in 0..xv as u32 {
                    let r = ok(self.lcp.rank(y, k - 1));
                    if r != 0 {
                        j = j.max(ok(self.lcp.select(y, r)));
                    }
                }
                for y in xv + 1..=pi {
                    kt += self.rank_count(y, j);
                }

                // Rows below k ending in count y < x count when they share at
                // least y infinities with row k, i.e. lie in k+1..=j_y where
                // j_y is the first LCP entry below y at or after k.
                let mut j = n;
                for y in 1..xv {
                    let v = (y - 1) as u32;
                    let r = ok(self.lcp.rank(v, k - 1));
                    if r < ok(self.lcp.rank(v, n)) {
                        j = j.min(ok(self.lcp.select(v, r + 1)));
                    }
                    kt += self.rank_count(y, j) - self.rank_count(y, k);
                }
                kt
            }
        };
        ok(self.l.insert(SENTINEL.0, kt));
        ok(self.f.insert(x, kt));
        kt
    }

    /// ∞-LCP between rows `i` and `i + 1` of the new text, with `L` and `F`
    /// already updated and the ∞-LCP array still that of the old text.
    fn update_lcp(&self, i: usize, kt: usize) -> usize {
        let j = i + 1;
        if i == 0 || j > self.n + 1 {
            return 0;
        }
        let fi = self.enc(ok(self.f.access(i)));
        let fj = self.enc(ok(self.f.access(j)));
        let (vi, vj) = (fi.count(), fj.count());
        let both_counts = vi.is_some() && vj.is_some();
        if fi != fj && !both_counts {
            return 0;
        }
        // The LF preimages are rows of the new text; neither is the new
        // row, since only the `$`-first row maps back to it. The old ∞-LCP
        // array is indexed by old rows.
        let to_old = |row: usize| if row < kt { row } else { row - 1 };
        let ip = to_old(self.lf_inv_unchecked(i));
        let jp = to_old(self.lf_inv_unchecked(j));
        let mut x = 0;
        for y in 0..=self.alphabet.pi_size() as u32 {
            if ok(self.lcp.rank(y, ip - 1)) != ok(self.lcp.rank(y, jp - 1)) {
                x = y as usize;
                break;
            }
        }
        if let (Some(vi), Some(vj)) = (vi, vj) {
            let m = vi.min(vj) as usize;
            if x < m {
                x += 1;
            } else if vi != vj {
                x = m;
            }
        }
        x
    }

    fn lf_unchecked(&self, i: usize) -> usize {
        let x = ok(self.l.access(i));
        ok(self.f.select(x, ok(self.l.rank(x, i))))
    }

    fn lf_inv_unchecked(&self, j: usize) -> usize {
        let y = ok(self.f.access(j));
        ok(self.l.select(y, ok(self.f.rank(y, j))))
    }

    fn check_row(&self, row: usize) -> Result<(), BuildError> {
        if row == 0 || row > self.n {
            Err(BuildError::RowOutOfRange { row, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Row reached from row `i` by moving the last symbol to the front.
    pub fn lf(&self, i: usize) -> Result<usize, BuildError> {
        self.check_row(i)?;
        Ok(self.lf_unchecked(i))
    }

    pub fn lf_inv(&self, j: usize) -> Result<usize, BuildError> {
        self.check_row(j)?;
        Ok(self.lf_inv_unchecked(j))
    }

    /// Row of the full-length rotation, the one whose last symbol is `$`.
    pub fn sentinel_row(&self) -> usize {
        ok(self.l.select(SENTINEL.0, 1))
    }

    /// The pBWT, i.e. the last column `L`.
    pub fn pbwt(&self) -> Vec<EncSymbol> {
        self.l.iter().map(|code| self.enc(code)).collect()
    }

    pub fn first_column(&self) -> Vec<EncSymbol> {
        self.f.iter().map(|code| self.enc(code)).collect()
    }

    pub fn lcp_inf(&self) -> Vec<usize> {
        self.lcp.iter().map(|v| v as usize).collect()
    }

    /// The run-length string over the statics: each static `a` repeated
    /// `|S|_a + 1` times, in alphabet order.
    pub fn c_array(&self) -> Vec<Sym> {
        self.c.iter().map(Sym).collect()
    }

    /// `(leftmost, rightmost)` occurrence of parameter `index`, counted from
    /// the right end of the text; `None` if it does not occur.
    pub fn occurrence_span(&self, index: usize) -> Option<(usize, usize)> {
        (self.left[index] != 0).then(|| (self.left[index], self.right[index]))
    }

    /// Row of `L` holding the rightmost occurrence of parameter `index`.
    pub fn rightmost_row(&self, index: usize) -> Option<usize> {
        (self.rm[index] != 0).then_some(self.rm[index])
    }

    /// Reads the count encoding of the whole text back out of `L` by
    /// following LF backwards from the `$` row.
    pub fn recover_encoding(&self) -> Vec<EncSymbol> {
        let mut row = self.sentinel_row();
        (0..self.n)
            .map(|_| {
                row = self.lf_inv_unchecked(row);
                self.enc(ok(self.l.access(row)))
            })
            .collect()
    }

    /// The columns `L` and `F` would hold between the rewrite and the row
    /// insertion if `c` were prepended. Leaves `self` untouched.
    #[doc(hidden)]
    pub fn intermediate_columns(
        &self,
        c: Sym,
    ) -> Result<(Vec<EncSymbol>, Vec<EncSymbol>), BuildError> {
        if c == SENTINEL {
            return Err(BuildError::SentinelPrepend);
        }
        if c.0 as usize >= self.alphabet.symbol_count() {
            return Err(BuildError::UnknownSymbol(c.0));
        }
        let mut probe = self.clone();
        probe.update_lf(c, probe.sentinel_row());
        Ok((probe.pbwt(), probe.first_column()))
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            n: self.n,
            l: self.pbwt(),
            f: self.first_column(),
            lcp_inf: self.lcp_inf(),
        }
    }
}
