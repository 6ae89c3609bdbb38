//! Deciding membership in the class of languages recognized by measure-only
//! automata with isolated cut point.
//!
//! A regular language belongs to the class exactly when it is literally
//! idempotent and piecewise testable, equivalently when its syntactic monoid
//! is J-trivial and maps every letter to an idempotent.
//! [`is_lmo_member`] decides the first form on the minimal DFA;
//! [`lmo_oracle`] decides the second through the monoid.

mod pipeline;
pub mod random;
mod verify;

pub use pipeline::{
    is_lmo_member, is_piecewise_testable, is_piecewise_testable_by_monoid, lmo_oracle,
    lmo_oracle_with_cap, Diagnosis, FailureReason,
};
pub use random::{random_dfa, random_partially_ordered_dfa};
pub use verify::{
    verify_construction, verify_construction_with_budget, VerificationReport, DEFAULT_WORD_BUDGET,
};

use crate::automata::DfaError;
use crate::quantum::QuantumError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DecisionError {
    #[error("enumeration needs {} words, budget is {budget}", words.map_or("too many".to_string(), |w| w.to_string()))]
    Budget { words: Option<u64>, budget: u64 },
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    #[error(transparent)]
    Dfa(#[from] DfaError),
}
