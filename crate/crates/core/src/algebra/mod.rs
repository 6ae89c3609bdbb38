//! Transition monoids of DFAs and Green's-relation predicates on them.
//!
//! The transition monoid of a minimal DFA is the syntactic monoid of its
//! language. Transformations compose left to right: the element of `uv` is
//! "apply `u`, then `v`".

mod green;
mod monoid;

pub use green::{
    green_report, green_report_with_cap, is_block_group, is_j_trivial, is_l_trivial, is_r_trivial,
    letters_idempotent, GreenReport,
};
pub use monoid::{
    transition_monoid, transition_monoid_with_cap, FiniteMonoid, Transformation,
    DEFAULT_ELEMENT_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("monoid has more than {cap} elements")]
    TooLarge { cap: usize },
}
