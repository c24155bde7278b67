//! Alphabets, the prev-encoding, the rotation-invariant count encoding and
//! the order used to sort prev-encoded rotations.
//!
//! Raw symbols are dense integer codes ([`Sym`]). The sentinel `$` is code 0,
//! the other static symbols follow in declaration order and the parameter
//! symbols come last. Characters only appear at the boundary
//! ([`Alphabet::encode`], the `render_*` helpers).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write as _;

use thiserror::Error;

/// Dense code of a raw symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(pub u32);

/// The sentinel `$`, the unique smallest static symbol.
pub const SENTINEL: Sym = Sym(0);

/// One symbol of a prev-encoded string.
///
/// The derived order is the one rotations are sorted by: `$` first, then the
/// remaining statics in alphabet order, then distances numerically, then ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PvSymbol {
    Static(Sym),
    /// Distance to the previous occurrence of the same parameter.
    Dist(usize),
    /// First occurrence of a parameter.
    Inf,
}

/// One symbol of the count encoding: a static symbol, or for a parameter
/// the number of distinct parameters up to and including its next cyclic
/// occurrence. Counts lie in `1..=|Π|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EncSymbol {
    Static(Sym),
    Count(u32),
}

impl EncSymbol {
    pub fn is_static(self) -> bool {
        matches!(self, EncSymbol::Static(_))
    }

    pub fn count(self) -> Option<u32> {
        match self {
            EncSymbol::Count(v) => Some(v),
            EncSymbol::Static(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("symbol {0:?} is declared more than once")]
    DuplicateSymbol(char),
    #[error("sentinel {0:?} cannot be a parameter symbol")]
    SentinelIsParameter(char),
    #[error("character {ch:?} at position {position} is not in the alphabet")]
    UnknownChar { ch: char, position: usize },
    #[error("sentinel {ch:?} appears inside the text at position {position}")]
    SentinelInText { ch: char, position: usize },
    #[error("symbol code {0} is outside the alphabet")]
    UnknownSymbol(u32),
}

/// Two disjoint ordered alphabets: statics (with the sentinel first) and
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    statics: Vec<char>,
    params: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from the sentinel and the declared statics and
    /// parameters. Listing the sentinel among the statics is allowed; it
    /// is always moved to the front.
    pub fn new(
        sentinel: char,
        statics: impl IntoIterator<Item = char>,
        params: impl IntoIterator<Item = char>,
    ) -> Result<Self, AlphabetError> {
        let mut all = vec![sentinel];
        let mut st = vec![sentinel];
        for ch in statics {
            if ch == sentinel {
                continue;
            }
            if all.contains(&ch) {
                return Err(AlphabetError::DuplicateSymbol(ch));
            }
            all.push(ch);
            st.push(ch);
        }
        let mut pi = Vec::new();
        for ch in params {
            if ch == sentinel {
                return Err(AlphabetError::SentinelIsParameter(ch));
            }
            if all.contains(&ch) {
                return Err(AlphabetError::DuplicateSymbol(ch));
            }
            all.push(ch);
            pi.push(ch);
        }
        Ok(Alphabet {
            statics: st,
            params: pi,
        })
    }

    /// Synthetic alphabet with `statics` non-sentinel statics and `params`
    /// parameters, drawn from two private-use blocks.
    pub fn with_sizes(statics: usize, params: usize) -> Self {
        let pick = |base: u32, i: usize| char::from_u32(base + i as u32).unwrap_or('\u{FFFD}');
        let mut st = vec!['$'];
        st.extend((0..statics).map(|i| pick(0xF0000, i)));
        Alphabet {
            statics: st,
            params: (0..params).map(|i| pick(0x100000, i)).collect(),
        }
    }

    /// |Σ|, the sentinel included.
    pub fn sigma_size(&self) -> usize {
        self.statics.len()
    }

    /// |Π|.
    pub fn pi_size(&self) -> usize {
        self.params.len()
    }

    pub fn symbol_count(&self) -> usize {
        self.statics.len() + self.params.len()
    }

    pub fn sentinel(&self) -> char {
        self.statics[0]
    }

    pub fn statics(&self) -> &[char] {
        &self.statics
    }

    pub fn params(&self) -> &[char] {
        &self.params
    }

    pub fn sym(&self, ch: char) -> Option<Sym> {
        if let Some(i) = self.statics.iter().position(|&c| c == ch) {
            return Some(Sym(i as u32));
        }
        self.params
            .iter()
            .position(|&c| c == ch)
            .map(|i| Sym((self.statics.len() + i) as u32))
    }

    pub fn char_of(&self, sym: Sym) -> Option<char> {
        let i = sym.0 as usize;
        if i < self.statics.len() {
            Some(self.statics[i])
        } else {
            self.params.get(i - self.statics.len()).copied()
        }
    }

    pub fn is_static(&self, sym: Sym) -> bool {
        (sym.0 as usize) < self.statics.len()
    }

    /// 0-based parameter index, or `None` for statics and unknown codes.
    pub fn param_index(&self, sym: Sym) -> Option<usize> {
        let i = (sym.0 as usize).checked_sub(self.statics.len())?;
        (i < self.params.len()).then_some(i)
    }

    pub fn param_sym(&self, index: usize) -> Sym {
        Sym((self.statics.len() + index) as u32)
    }

    pub fn check(&self, sym: Sym) -> Result<(), AlphabetError> {
        if (sym.0 as usize) < self.symbol_count() {
            Ok(())
        } else {
            Err(AlphabetError::UnknownSymbol(sym.0))
        }
    }

    /// Maps text to symbol codes. Positions in errors are 1-based character
    /// positions.
    pub fn encode(&self, text: &str) -> Result<Vec<Sym>, AlphabetError> {
        text.chars()
            .enumerate()
            .map(|(i, ch)| {
                self.sym(ch).ok_or(AlphabetError::UnknownChar {
                    ch,
                    position: i + 1,
                })
            })
            .collect()
    }

    /// Like [`Alphabet::encode`] but rejects the sentinel, for text that the
    /// builder will terminate itself.
    pub fn encode_body(&self, text: &str) -> Result<Vec<Sym>, AlphabetError> {
        let syms = self.encode(text)?;
        if let Some(i) = syms.iter().position(|&s| s == SENTINEL) {
            return Err(AlphabetError::SentinelInText {
                ch: self.sentinel(),
                position: i + 1,
            });
        }
        Ok(syms)
    }

    /// Dense code of an encoded symbol inside the `L`/`F` sequences: statics
    /// keep their code, count `v` maps to `|Σ| + v - 1`.
    pub fn enc_code(&self, e: EncSymbol) -> u32 {
        match e {
            EncSymbol::Static(s) => s.0,
            EncSymbol::Count(v) => self.statics.len() as u32 + v - 1,
        }
    }

    pub fn enc_from_code(&self, code: u32) -> EncSymbol {
        let s = self.statics.len() as u32;
        if code < s {
            EncSymbol::Static(Sym(code))
        } else {
            EncSymbol::Count(code - s + 1)
        }
    }

    /// Size of the alphabet of the `L`/`F` sequences.
    pub fn enc_alphabet_size(&self) -> usize {
        self.symbol_count()
    }

    pub fn render_syms(&self, text: &[Sym]) -> String {
        text.iter()
            .map(|&s| self.char_of(s).unwrap_or('\u{FFFD}'))
            .collect()
    }

    pub fn enc_token(&self, e: EncSymbol) -> String {
        let mut out = String::new();
        self.push_enc(&mut out, e);
        out
    }

    pub fn pv_token(&self, p: PvSymbol) -> String {
        let mut out = String::new();
        self.push_pv(&mut out, p);
        out
    }

    /// Space-separated tokens: statics verbatim, counts in decimal.
    pub fn render_enc(&self, seq: &[EncSymbol]) -> String {
        let mut out = String::new();
        for (i, &e) in seq.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            self.push_enc(&mut out, e);
        }
        out
    }

    /// Space-separated tokens, ∞ written as `∞`.
    pub fn render_pv(&self, seq: &[PvSymbol]) -> String {
        let mut out = String::new();
        for (i, &p) in seq.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            self.push_pv(&mut out, p);
        }
        out
    }

    fn push_enc(&self, out: &mut String, e: EncSymbol) {
        match e {
            EncSymbol::Static(s) => out.push(self.char_of(s).unwrap_or('\u{FFFD}')),
            EncSymbol::Count(v) => {
                let _ = write!(out, "{v}");
            }
        }
    }

    fn push_pv(&self, out: &mut String, p: PvSymbol) {
        match p {
            PvSymbol::Static(s) => out.push(self.char_of(s).unwrap_or('\u{FFFD}')),
            PvSymbol::Dist(d) => {
                let _ = write!(out, "{d}");
            }
            PvSymbol::Inf => out.push('∞'),
        }
    }
}

fn check_all(alphabet: &Alphabet, text: &[Sym]) -> Result<(), AlphabetError> {
    text.iter().try_for_each(|&s| alphabet.check(s))
}

/// Prev-encoding: statics verbatim, each parameter replaced by the distance
/// to its previous occurrence, or ∞ on its first occurrence.
pub fn prev_encode(alphabet: &Alphabet, text: &[Sym]) -> Result<Vec<PvSymbol>, AlphabetError> {
    check_all(alphabet, text)?;
    let mut last = vec![usize::MAX; alphabet.pi_size()];
    Ok(text
        .iter()
        .enumerate()
        .map(|(i, &s)| match alphabet.param_index(s) {
            None => PvSymbol::Static(s),
            Some(a) => {
                let prev = core::mem::replace(&mut last[a], i);
                if prev == usize::MAX {
                    PvSymbol::Inf
                } else {
                    PvSymbol::Dist(i - prev)
                }
            }
        })
        .collect())
}

/// Count encoding: for a parameter at position `i`, the number of distinct
/// parameters in the cyclic window that starts right after `i` and ends at
/// the next occurrence of the same parameter (which is `i` itself when the
/// parameter occurs once).
///
/// Runs in `O(n·|Π|)` with a backward sweep over the doubled text that keeps
/// the next occurrence of every parameter.
pub fn rot_encode(alphabet: &Alphabet, text: &[Sym]) -> Result<Vec<EncSymbol>, AlphabetError> {
    check_all(alphabet, text)?;
    let n = text.len();
    let mut next = vec![usize::MAX; alphabet.pi_size()];
    let mut out = vec![EncSymbol::Count(0); n];
    for j in (0..2 * n).rev() {
        let s = text[j % n];
        let a = alphabet.param_index(s);
        if j < n {
            out[j] = match a {
                None => EncSymbol::Static(s),
                Some(a) => {
                    let bound = next[a];
                    EncSymbol::Count(next.iter().filter(|&&q| q <= bound).count() as u32)
                }
            };
        }
        if let Some(a) = a {
            next[a] = j;
        }
    }
    Ok(out)
}

/// Whether two p-strings are equal up to a renaming of parameters.
pub fn p_match(alphabet: &Alphabet, s: &[Sym], t: &[Sym]) -> Result<bool, AlphabetError> {
    if s.len() != t.len() {
        check_all(alphabet, s)?;
        check_all(alphabet, t)?;
        return Ok(false);
    }
    Ok(prev_encode(alphabet, s)? == prev_encode(alphabet, t)?)
}

/// The `i`-th right rotation: the last `i mod |w|` symbols move to the front.
pub fn rotate<T: Clone>(w: &[T], i: usize) -> Vec<T> {
    if w.is_empty() {
        return Vec::new();
    }
    let r = i % w.len();
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[w.len() - r..]);
    out.extend_from_slice(&w[..w.len() - r]);
    out
}

/// Number of ∞ symbols in the longest common prefix of two pv-strings.
pub fn lcp_inf(x: &[PvSymbol], y: &[PvSymbol]) -> usize {
    x.iter()
        .zip(y)
        .take_while(|(a, b)| a == b)
        .filter(|(a, _)| **a == PvSymbol::Inf)
        .count()
}

pub fn pv_compare(x: PvSymbol, y: PvSymbol) -> Ordering {
    x.cmp(&y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab_uvxy() -> Alphabet {
        Alphabet::new('$', "ab".chars(), "uvxy".chars()).unwrap()
    }

    fn axyz() -> Alphabet {
        Alphabet::new('$', "a".chars(), "xyz".chars()).unwrap()
    }

    #[test]
    fn codes_are_dense() {
        let al = ab_uvxy();
        assert_eq!(al.sym('$'), Some(SENTINEL));
        assert_eq!(al.sym('a'), Some(Sym(1)));
        assert_eq!(al.sym('u'), Some(Sym(3)));
        assert_eq!(al.param_index(Sym(4)), Some(1));
        assert_eq!(al.param_index(Sym(2)), None);
        assert_eq!(al.param_index(Sym(7)), None);
        assert_eq!(al.char_of(Sym(6)), Some('y'));
        assert_eq!(al.sym('q'), None);
    }

    #[test]
    fn alphabet_rejects_overlap() {
        assert_eq!(
            Alphabet::new('$', "ab".chars(), "xa".chars()),
            Err(AlphabetError::DuplicateSymbol('a'))
        );
        assert_eq!(
            Alphabet::new('$', "".chars(), "x$".chars()),
            Err(AlphabetError::SentinelIsParameter('$'))
        );
        let al = Alphabet::new('$', "$a".chars(), "x".chars()).unwrap();
        assert_eq!(al.statics(), &['$', 'a']);
    }

    #[test]
    fn encode_reports_position() {
        let al = axyz();
        assert_eq!(
            al.encode("xaq"),
            Err(AlphabetError::UnknownChar {
                ch: 'q',
                position: 3
            })
        );
        assert_eq!(
            al.encode_body("xa$a"),
            Err(AlphabetError::SentinelInText {
                ch: '$',
                position: 3
            })
        );
    }

    #[test]
    fn prev_encoding_goldens() {
        let al = ab_uvxy();
        let t = al.encode("uvvauvb").unwrap();
        let pv = prev_encode(&al, &t).unwrap();
        assert_eq!(al.render_pv(&pv), "∞ ∞ 1 a 4 3 b");

        let al = axyz();
        let t = al.encode("xayzzazyza$").unwrap();
        assert_eq!(
            al.render_pv(&prev_encode(&al, &t).unwrap()),
            "∞ a ∞ ∞ 1 a 2 5 2 a $"
        );
        let t = al.encode("$").unwrap();
        assert_eq!(
            prev_encode(&al, &t).unwrap(),
            vec![PvSymbol::Static(SENTINEL)]
        );
        assert!(prev_encode(&al, &[]).unwrap().is_empty());
    }

    #[test]
    fn count_encoding_goldens() {
        let al = ab_uvxy();
        let t = al.encode("uvvauvb").unwrap();
        assert_eq!(
            al.render_enc(&rot_encode(&al, &t).unwrap()),
            "2 1 2 a 2 2 b"
        );

        let al = axyz();
        let t = al.encode("xayzzazyza$").unwrap();
        assert_eq!(
            al.render_enc(&rot_encode(&al, &t).unwrap()),
            "3 a 2 1 1 a 2 3 3 a $"
        );
        let t = al.encode("$").unwrap();
        assert_eq!(al.render_enc(&rot_encode(&al, &t).unwrap()), "$");
        assert!(rot_encode(&al, &[]).unwrap().is_empty());
    }

    #[test]
    fn unknown_codes_are_rejected() {
        let al = axyz();
        assert_eq!(
            prev_encode(&al, &[Sym(9)]),
            Err(AlphabetError::UnknownSymbol(9))
        );
        assert_eq!(
            rot_encode(&al, &[Sym(0), Sym(5)]),
            Err(AlphabetError::UnknownSymbol(5))
        );
    }

    #[test]
    fn p_match_examples() {
        let al = ab_uvxy();
        let s = al.encode("uvvauvb").unwrap();
        let t = al.encode("xyyaxyb").unwrap();
        assert!(p_match(&al, &s, &t).unwrap());
        assert!(p_match(&al, &s, &s).unwrap());
        let xy = al.encode("xy").unwrap();
        let xx = al.encode("xx").unwrap();
        assert!(!p_match(&al, &xy, &xx).unwrap());
        assert!(!p_match(&al, &xy, &s).unwrap());
    }

    #[test]
    fn rotation_examples() {
        let al = axyz();
        let t = al.encode("xayzzazyza$").unwrap();
        assert_eq!(al.render_syms(&rotate(&t, 1)), "$xayzzazyza");
        assert_eq!(rotate(&t, 0), t);
        assert_eq!(rotate(&t, t.len()), t);
        assert_eq!(rotate(&t, 3), rotate(&t, 3 + t.len()));
        assert!(rotate::<Sym>(&[], 5).is_empty());
    }

    #[test]
    fn lcp_inf_counts_only_common_infinities() {
        use PvSymbol::*;
        let x = [Inf, Static(Sym(1)), Inf, Dist(2)];
        let y = [Inf, Static(Sym(1)), Inf, Dist(3), Inf];
        assert_eq!(lcp_inf(&x, &y), 2);
        assert_eq!(lcp_inf(&x, &x), 2);
        assert_eq!(lcp_inf(&[Static(SENTINEL), Inf], &[Static(Sym(1)), Inf]), 0);
        assert_eq!(lcp_inf(&[], &x), 0);
    }

    #[test]
    fn pv_order() {
        use PvSymbol::*;
        assert_eq!(pv_compare(Static(SENTINEL), Static(Sym(1))), Ordering::Less);
        assert_eq!(pv_compare(Dist(5), Inf), Ordering::Less);
        assert_eq!(pv_compare(Static(Sym(9)), Dist(1)), Ordering::Less);
        assert_eq!(pv_compare(Dist(7), Dist(7)), Ordering::Equal);
        assert_eq!(pv_compare(Dist(8), Dist(7)), Ordering::Greater);
    }

    #[test]
    fn pv_order_is_total_on_small_domain() {
        use PvSymbol::*;
        let mut dom = vec![Inf];
        dom.extend((0..4).map(|s| Static(Sym(s))));
        dom.extend((1..5).map(Dist));
        for &x in &dom {
            for &y in &dom {
                let xy = pv_compare(x, y);
                assert_eq!(xy, pv_compare(y, x).reverse());
                assert_eq!(xy == Ordering::Equal, x == y);
                for &z in &dom {
                    if xy != Ordering::Greater && pv_compare(y, z) != Ordering::Greater {
                        assert_ne!(pv_compare(x, z), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn enc_code_roundtrip() {
        let al = axyz();
        for code in 0..al.enc_alphabet_size() as u32 {
            assert_eq!(al.enc_code(al.enc_from_code(code)), code);
        }
        assert_eq!(al.enc_code(EncSymbol::Count(1)), 2);
        assert_eq!(al.enc_code(EncSymbol::Static(SENTINEL)), 0);
    }
}
