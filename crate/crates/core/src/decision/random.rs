//! Reproducible random DFAs.
//!
//! Generator: a `ChaCha8Rng` seeded with `seed_from_u64(seed)`. Targets are
//! drawn first, state by state and within a state in alphabet order, each
//! with `random_range`; then one `random_bool(0.5)` per state decides
//! acceptance. The initial state is always 0. ChaCha output is specified
//! independently of the platform, so a seed always yields the same DFA.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::Dfa;
use crate::Symbol;

fn generate(
    seed: u64,
    n_states: usize,
    alphabet: &[Symbol],
    target: impl Fn(&mut ChaCha8Rng, usize) -> usize,
) -> Dfa {
    assert!(n_states >= 1, "a DFA needs at least one state");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let transitions: Vec<Vec<usize>> = (0..n_states)
        .map(|q| alphabet.iter().map(|_| target(&mut rng, q)).collect())
        .collect();
    let accepting: Vec<usize> = (0..n_states).filter(|_| rng.random_bool(0.5)).collect();
    Dfa::new(alphabet.to_vec(), transitions, 0, accepting).expect("generated DFA is valid")
}

/// Uniform transitions and a uniform accepting subset.
pub fn random_dfa(seed: u64, n_states: usize, alphabet: &[Symbol]) -> Dfa {
    generate(seed, n_states, alphabet, |rng, _| {
        rng.random_range(0..n_states)
    })
}

/// Like [`random_dfa`], but every transition from `q` targets some state
/// `≥ q`, so the only cycles are self-loops.
pub fn random_partially_ordered_dfa(seed: u64, n_states: usize, alphabet: &[Symbol]) -> Dfa {
    generate(seed, n_states, alphabet, |rng, q| {
        rng.random_range(q..n_states)
    })
}
