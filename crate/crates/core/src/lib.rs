//! Online construction of the parameterized Burrows-Wheeler transform (pBWT).
//!
//! A parameterized string mixes *static* symbols, which must match exactly,
//! with *parameter* symbols, which match up to a consistent renaming. The
//! pBWT is the last column of the matrix of all rotations of such a string,
//! each rotation written in a renaming-invariant count encoding and the rows
//! sorted by their prev-encoding.
//!
//! [`PbwtBuilder`] maintains the pBWT together with its first column, the
//! ∞-LCP array and a few per-parameter tables while the text is read from
//! right to left, one symbol per [`PbwtBuilder::prepend`] call. The
//! quadratic [`oracle`] module computes the same tables straight from their
//! definitions and exists to check the builder.
//!
//! ```
//! use pbwt_core::{Alphabet, PbwtBuilder};
//!
//! let alphabet = Alphabet::new('$', "a".chars(), "xyz".chars()).unwrap();
//! let text = alphabet.encode("xayzzazyza").unwrap();
//! let builder = PbwtBuilder::from_text(alphabet.clone(), &text).unwrap();
//! assert_eq!(alphabet.render_enc(&builder.pbwt()), "a 3 3 1 3 1 $ 2 2 a a");
//! ```
//!
//! Positions passed to and returned from the sequence and builder APIs are
//! 1-based, matching the row numbering of the rotation matrix.
#![no_std]

extern crate alloc;

pub mod alphabet;
pub mod builder;
pub mod dynseq;
pub mod oracle;

pub use alphabet::{
    lcp_inf, p_match, prev_encode, pv_compare, rot_encode, rotate, Alphabet, AlphabetError,
    EncSymbol, PvSymbol, Sym, SENTINEL,
};
pub use builder::{BuildError, PbwtBuilder, Snapshot};
pub use dynseq::{DynSeq, DynSeqError};
pub use oracle::{build_tables, OracleError, OracleTables};
