use pbwt_core::{build_tables, rot_encode, rotate, Alphabet, PbwtBuilder, Sym, SENTINEL};
use serde::Serialize;

/// One row of the sorted rotation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub i: usize,
    #[serde(rename = "RA")]
    pub ra: usize,
    #[serde(rename = "LCPinf")]
    pub lcp_inf: usize,
    pub prev_encoding: String,
    #[serde(rename = "F")]
    pub f: String,
    pub encoding: String,
    #[serde(rename = "L")]
    pub l: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dump {
    pub n: usize,
    pub sigma: String,
    pub pi: String,
    pub sentinel: String,
    pub records: Vec<Record>,
}

/// `L`, `F` and ∞-LCP come from the online builder; the rotation array and
/// the full row encodings, which the builder does not keep, come from the
/// oracle.
pub fn dump(alphabet: &Alphabet, body: &[Sym]) -> Dump {
    let builder = PbwtBuilder::from_text(alphabet.clone(), body).expect("body symbols are valid");
    let mut text = body.to_vec();
    text.push(SENTINEL);
    let tab = build_tables(alphabet, &text).expect("text ends with a unique sentinel");
    let enc = rot_encode(alphabet, &text).expect("symbols are valid");
    let snap = builder.snapshot();
    let records = (1..=tab.n)
        .map(|i| {
            let p = tab.ra[i - 1];
            Record {
                i,
                ra: p,
                lcp_inf: snap.lcp_inf[i - 1],
                prev_encoding: alphabet.render_pv(&tab.row_key(i)),
                f: alphabet.enc_token(snap.f[i - 1]),
                encoding: alphabet.render_enc(&rotate(&enc, p)),
                l: alphabet.enc_token(snap.l[i - 1]),
            }
        })
        .collect();
    Dump {
        n: tab.n,
        sigma: alphabet.statics().iter().collect(),
        pi: alphabet.params().iter().collect(),
        sentinel: alphabet.sentinel().to_string(),
        records,
    }
}
