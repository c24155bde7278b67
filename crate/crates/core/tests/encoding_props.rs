mod common;

use std::collections::HashMap;

use pbwt_core::{p_match, prev_encode, rot_encode, rotate, Alphabet, EncSymbol, Sym};
use proptest::prelude::*;

fn alphabet() -> Alphabet {
    Alphabet::new('$', "abc".chars(), "uvwxyz".chars()).unwrap()
}

/// Renaming-based p-match, independent of any encoding.
fn renames_into(alphabet: &Alphabet, s: &[Sym], t: &[Sym]) -> bool {
    if s.len() != t.len() {
        return false;
    }
    let mut fwd = HashMap::new();
    let mut bwd = HashMap::new();
    s.iter().zip(t).all(
        |(&a, &b)| match (alphabet.is_static(a), alphabet.is_static(b)) {
            (true, true) => a == b,
            (false, false) => *fwd.entry(a).or_insert(b) == b && *bwd.entry(b).or_insert(a) == a,
            _ => false,
        },
    )
}

fn body(max_len: usize) -> impl Strategy<Value = Vec<Sym>> {
    prop::collection::vec(1u32..10, 0..max_len).prop_map(|v| v.into_iter().map(Sym).collect())
}

fn param_perm() -> impl Strategy<Value = Vec<u32>> {
    Just((4u32..10).collect::<Vec<_>>()).prop_shuffle()
}

fn apply(perm: &[u32], s: &[Sym]) -> Vec<Sym> {
    s.iter()
        .map(|&Sym(c)| {
            if c >= 4 {
                Sym(perm[c as usize - 4])
            } else {
                Sym(c)
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn bijection_preserves_encodings(s in body(40), perm in param_perm()) {
        let al = alphabet();
        let t = apply(&perm, &s);
        prop_assert!(renames_into(&al, &s, &t));
        prop_assert!(p_match(&al, &s, &t).unwrap());
        prop_assert_eq!(prev_encode(&al, &s).unwrap(), prev_encode(&al, &t).unwrap());
        prop_assert_eq!(rot_encode(&al, &s).unwrap(), rot_encode(&al, &t).unwrap());
    }

    #[test]
    fn encodings_agree_with_renaming(s in body(12), t in body(12)) {
        let al = alphabet();
        let expected = renames_into(&al, &s, &t);
        prop_assert_eq!(p_match(&al, &s, &t).unwrap(), expected);
        if s.len() == t.len() {
            prop_assert_eq!(prev_encode(&al, &s).unwrap() == prev_encode(&al, &t).unwrap(), expected);
            prop_assert_eq!(rot_encode(&al, &s).unwrap() == rot_encode(&al, &t).unwrap(), expected);
        }
    }

    #[test]
    fn mutated_parameter_breaks_match(
        s in body(40).prop_filter("needs a parameter", |s| s.iter().any(|c| c.0 >= 4)),
        pick in any::<prop::sample::Index>(),
        to in 4u32..10,
    ) {
        let al = alphabet();
        let params: Vec<usize> = (0..s.len()).filter(|&i| s[i].0 >= 4).collect();
        let mut t = s.clone();
        t[params[pick.index(params.len())]] = Sym(to);
        let matches = renames_into(&al, &s, &t);
        prop_assert_eq!(prev_encode(&al, &s).unwrap() == prev_encode(&al, &t).unwrap(), matches);
        prop_assert_eq!(rot_encode(&al, &s).unwrap() == rot_encode(&al, &t).unwrap(), matches);
    }

    #[test]
    fn encoding_commutes_with_rotation(s in body(30), i in 0usize..31) {
        let al = alphabet();
        let i = if s.is_empty() { 0 } else { i % (s.len() + 1) };
        prop_assert_eq!(
            rot_encode(&al, &rotate(&s, i)).unwrap(),
            rotate(&rot_encode(&al, &s).unwrap(), i)
        );
    }

    #[test]
    fn counts_bounded_by_parameter_alphabet(s in body(60)) {
        let al = alphabet();
        for e in rot_encode(&al, &s).unwrap() {
            if let EncSymbol::Count(v) = e {
                prop_assert!((1..=al.pi_size() as u32).contains(&v));
            }
        }
    }
}
