//! Definition-level construction of the rotation array, first/last columns,
//! ∞-LCP array and LF mapping of a whole text.
//!
//! Rotations are sorted by direct comparison of their prev-encodings, which
//! costs `O(n² log n)` in the worst case. The prev-encoding of a rotation is
//! read lazily from a table of cyclic previous-occurrence distances instead
//! of being materialized, so memory stays linear.
//!
//! Row numbers and rotation indices stored in [`OracleTables`] are 1-based;
//! `ra[i - 1]` is the rotation index of row `i`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::alphabet::{rot_encode, Alphabet, AlphabetError, EncSymbol, PvSymbol, Sym, SENTINEL};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("text must end with the sentinel")]
    MissingSentinel,
    #[error("sentinel occurs again at position {0}")]
    DuplicateSentinel(usize),
    #[error("row {row} out of range for {n} rows")]
    RowOutOfRange { row: usize, n: usize },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

#[derive(Clone, Debug)]
pub struct OracleTables {
    pub n: usize,
    pub ra: Vec<usize>,
    pub ra_inv: Vec<usize>,
    pub f: Vec<EncSymbol>,
    pub l: Vec<EncSymbol>,
    pub lcp_inf: Vec<usize>,
    pub lf: Vec<usize>,
    keys: RotationKeys,
}

/// Prev-encodings of all rotations of a text, produced on demand.
#[derive(Clone, Debug)]
pub struct RotationKeys {
    text: Vec<Sym>,
    /// Cyclic distance back to the previous occurrence of the same parameter
    /// (`n` when it occurs once); 0 marks a static.
    back: Vec<usize>,
}

impl RotationKeys {
    pub fn new(alphabet: &Alphabet, text: &[Sym]) -> Result<Self, AlphabetError> {
        for &s in text {
            alphabet.check(s)?;
        }
        let n = text.len();
        let mut back = vec![0; n];
        let mut last = vec![usize::MAX; alphabet.pi_size()];
        for j in 0..2 * n {
            let q = j % n;
            if let Some(a) = alphabet.param_index(text[q]) {
                if j >= n {
                    back[q] = j - last[a];
                }
                last[a] = j;
            }
        }
        Ok(RotationKeys {
            text: text.to_vec(),
            back,
        })
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Index into the text of the first symbol of rotation `p`.
    fn start(&self, p: usize) -> usize {
        let n = self.text.len();
        (n - p % n) % n
    }

    /// Symbol `r` (0-based) of the prev-encoding of rotation `p`.
    pub fn symbol(&self, p: usize, r: usize) -> PvSymbol {
        let n = self.text.len();
        let q = (self.start(p) + r) % n;
        match self.back[q] {
            0 => PvSymbol::Static(self.text[q]),
            d if d <= r => PvSymbol::Dist(d),
            _ => PvSymbol::Inf,
        }
    }

    pub fn key(&self, p: usize) -> impl Iterator<Item = PvSymbol> + '_ {
        (0..self.text.len()).map(move |r| self.symbol(p, r))
    }

    pub fn to_vec(&self, p: usize) -> Vec<PvSymbol> {
        self.key(p).collect()
    }

    pub fn compare(&self, p: usize, q: usize) -> Ordering {
        self.key(p).cmp(self.key(q))
    }

    /// ∞-count of the longest common prefix of rotations `p` and `q`.
    pub fn lcp_inf(&self, p: usize, q: usize) -> usize {
        self.key(p)
            .zip(self.key(q))
            .take_while(|(a, b)| a == b)
            .filter(|(a, _)| *a == PvSymbol::Inf)
            .count()
    }
}

/// Builds every table from the definitions. The text must end with the
/// sentinel and contain it nowhere else.
pub fn build_tables(alphabet: &Alphabet, text: &[Sym]) -> Result<OracleTables, OracleError> {
    match text.last() {
        Some(&SENTINEL) => {}
        _ => return Err(OracleError::MissingSentinel),
    }
    if let Some(i) = text[..text.len() - 1].iter().position(|&s| s == SENTINEL) {
        return Err(OracleError::DuplicateSentinel(i + 1));
    }
    let n = text.len();
    let keys = RotationKeys::new(alphabet, text)?;
    let enc = rot_encode(alphabet, text)?;

    let mut ra: Vec<usize> = (1..=n).collect();
    ra.sort_by(|&p, &q| keys.compare(p, q));
    let mut ra_inv = vec![0; n];
    for (i, &p) in ra.iter().enumerate() {
        ra_inv[p - 1] = i + 1;
    }
    let f = ra.iter().map(|&p| enc[keys.start(p)]).collect();
    let l = ra
        .iter()
        .map(|&p| enc[(keys.start(p) + n - 1) % n])
        .collect();
    let mut lcp_inf: Vec<usize> = ra.windows(2).map(|w| keys.lcp_inf(w[0], w[1])).collect();
    lcp_inf.push(0);
    let lf = ra.iter().map(|&p| ra_inv[p % n]).collect();

    Ok(OracleTables {
        n,
        ra,
        ra_inv,
        f,
        l,
        lcp_inf,
        lf,
        keys,
    })
}

impl OracleTables {
    pub fn keys(&self) -> &RotationKeys {
        &self.keys
    }

    /// Prev-encoding of the rotation in row `i`.
    pub fn row_key(&self, i: usize) -> Vec<PvSymbol> {
        self.keys.to_vec(self.ra[i - 1])
    }

    /// ∞-LCP of rows `i < j`, computed directly from their prev-encodings.
    pub fn lcp_pair(&self, i: usize, j: usize) -> Result<usize, OracleError> {
        for row in [i, j] {
            if row == 0 || row > self.n {
                return Err(OracleError::RowOutOfRange { row, n: self.n });
            }
        }
        if i >= j {
            return Err(OracleError::RowOutOfRange { row: j, n: self.n });
        }
        Ok(self.keys.lcp_inf(self.ra[i - 1], self.ra[j - 1]))
    }

    /// Checks the LF ordering rule for every pair of rows whose last symbol
    /// is a parameter, and that equal last symbols keep their relative order
    /// under LF.
    pub fn lf_order_check(&self) -> bool {
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let (li, lj) = (self.l[i - 1], self.l[j - 1]);
                let lf_less = self.lf[i - 1] < self.lf[j - 1];
                if li == lj && !lf_less {
                    return false;
                }
                if let (Some(vi), Some(vj)) = (li.count(), lj.count()) {
                    let lcp = self.keys.lcp_inf(self.ra[i - 1], self.ra[j - 1]);
                    let rule = ((vi as usize) - 1).min(lcp) < vj as usize;
                    if rule != lf_less {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{prev_encode, rotate};

    fn axyz() -> (Alphabet, Vec<Sym>) {
        let al = Alphabet::new('$', "a".chars(), "xyz".chars()).unwrap();
        let t = al.encode("xayzzazyza$").unwrap();
        (al, t)
    }

    #[test]
    fn running_example_columns() {
        let (al, t) = axyz();
        let tab = build_tables(&al, &t).unwrap();
        assert_eq!(tab.ra, vec![1, 2, 10, 6, 3, 7, 11, 8, 4, 9, 5]);
        assert_eq!(al.render_enc(&tab.l), "a 3 3 1 3 1 $ 2 2 a a");
        assert_eq!(al.render_enc(&tab.f), "$ a a a 3 1 3 1 3 2 2");
        assert_eq!(tab.lcp_inf, vec![0, 0, 2, 0, 1, 1, 1, 1, 2, 2, 0]);
        assert_eq!(tab.lf[0], 2);
        assert_eq!(al.render_pv(&tab.row_key(3)), "a ∞ ∞ 1 a 2 5 2 a $ ∞");
        for i in 1..=tab.n {
            assert_eq!(tab.ra_inv[tab.ra[i - 1] - 1], i);
            assert_eq!(tab.l[i - 1], tab.f[tab.lf[i - 1] - 1]);
        }
    }

    #[test]
    fn extended_example_last_column() {
        let (al, _) = axyz();
        let t = al.encode("yxayzzazyza$").unwrap();
        let tab = build_tables(&al, &t).unwrap();
        assert_eq!(al.render_enc(&tab.l), "a 3 3 1 2 1 2 2 2 $ a a");
    }

    #[test]
    fn single_sentinel() {
        let (al, _) = axyz();
        let tab = build_tables(&al, &[SENTINEL]).unwrap();
        assert_eq!(tab.ra, vec![1]);
        assert_eq!(tab.l, vec![EncSymbol::Static(SENTINEL)]);
        assert_eq!(tab.f, vec![EncSymbol::Static(SENTINEL)]);
        assert_eq!(tab.lcp_inf, vec![0]);
        assert_eq!(tab.lf, vec![1]);
    }

    #[test]
    fn sentinel_preconditions() {
        let (al, _) = axyz();
        let t = al.encode("xa").unwrap();
        assert_eq!(
            build_tables(&al, &t).unwrap_err(),
            OracleError::MissingSentinel
        );
        assert_eq!(
            build_tables(&al, &[]).unwrap_err(),
            OracleError::MissingSentinel
        );
        let t = al.encode("x$a$").unwrap();
        assert_eq!(
            build_tables(&al, &t).unwrap_err(),
            OracleError::DuplicateSentinel(2)
        );
    }

    #[test]
    fn lazy_keys_match_materialized_rotations() {
        let (al, t) = axyz();
        let keys = RotationKeys::new(&al, &t).unwrap();
        for p in 0..=t.len() {
            assert_eq!(keys.to_vec(p), prev_encode(&al, &rotate(&t, p)).unwrap());
        }
    }

    #[test]
    fn lcp_pair_and_lf_order() {
        let (al, t) = axyz();
        let tab = build_tables(&al, &t).unwrap();
        assert_eq!(tab.lcp_pair(3, 4), Ok(2));
        assert_eq!(tab.lcp_pair(1, 2), Ok(0));
        assert!(tab.lcp_pair(4, 4).is_err());
        assert!(tab.lcp_pair(1, 12).is_err());
        assert!(tab.lf_order_check());

        let x = al.encode("x$").unwrap();
        assert!(build_tables(&al, &x).unwrap().lf_order_check());
    }
}
