//! Total deterministic finite automata and the language-level checks built
//! on them.

mod boolean;
mod dfa;
mod format;
mod minimize;
mod shuffle;
mod variation;
mod word;

pub use boolean::{complement, equivalent, is_empty, product, BoolOp};
pub use dfa::{Dfa, State};
pub use format::{parse_dfa, serialize_dfa, ParseError};
pub use minimize::minimize;
pub use shuffle::{pt_canonical_dfa, word_in_shuffle_ideal};
pub use variation::{
    is_literally_idempotent, is_partially_ordered, sup_variation, sup_variation_witness, variation,
    SupVariation,
};
pub use word::{count_words_up_to, words_up_to};

use crate::Symbol;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DfaError {
    #[error("a DFA needs at least one state")]
    NoStates,
    #[error("state {0} out of range (state count {1})")]
    StateOutOfRange(usize, usize),
    #[error("state {state} has {found} transitions, expected {expected}")]
    RowLength {
        state: usize,
        expected: usize,
        found: usize,
    },
    #[error("alphabet lists `{0}` more than once")]
    DuplicateSymbol(Symbol),
    #[error("symbol `{0}` is not in the alphabet")]
    ForeignSymbol(Symbol),
    #[error("automata have different alphabets")]
    AlphabetMismatch,
}
