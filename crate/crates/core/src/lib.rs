//! Measure-only one-way quantum finite automata and the class of languages
//! they recognize with isolated cut point.
//!
//! * [`quantum`] simulates automata through density matrices and builds the
//!   automaton `A[a₁,…,aₖ]` for each shuffle ideal `Σ*a₁Σ*…Σ*aₖΣ*`.
//! * [`automata`] holds total DFAs: parsing, Hopcroft minimization, boolean
//!   operations, literal idempotency and variation.
//! * [`algebra`] builds transition monoids and tests Green's-relation
//!   properties (R-, L-, J-triviality, block groups).
//! * [`decision`] decides membership of a regular language in the class,
//!   cross-checks it against the monoid characterization, and verifies the
//!   quantum construction by exhaustive enumeration.
//! * [`cli`] is the command-line front end.

pub mod algebra;
pub mod automata;
pub mod cli;
pub mod decision;
pub mod quantum;

/// Alphabet symbols. File formats and the CLI restrict them to single
/// printable non-whitespace characters.
pub type Symbol = char;
