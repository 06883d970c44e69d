//! Exact injective arithmetic for component encodings.

mod pairing;
mod term;

pub use pairing::{cantor_pair, cantor_pair4, r_combine, sym_pair};
pub use term::{CEncoding, ChildTuple, Numeric, Term, TermId, TermStore, DEFAULT_BIT_BUDGET};
