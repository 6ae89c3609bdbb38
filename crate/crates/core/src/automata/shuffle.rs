use super::{Dfa, DfaError};
use crate::quantum::PtSpec;
use crate::Symbol;

/// The `k+1`-state subsequence-progress automaton of `Σ*a₁Σ*…Σ*aₖΣ*`.
///
/// State `i < k` advances on `a_{i+1}` and loops on everything else; state
/// `k` is absorbing and the only accepting state. It is already minimal.
pub fn pt_canonical_dfa(spec: &PtSpec) -> Dfa {
    let k = spec.len();
    let alphabet = spec.alphabet().to_vec();
    let mut table = Vec::with_capacity((k + 1) * alphabet.len());
    for i in 0..=k {
        for &s in &alphabet {
            let advance = i < k && spec.letters()[i] == s;
            table.push(if advance { i + 1 } else { i });
        }
    }
    let mut accepting = vec![false; k + 1];
    accepting[k] = true;
    Dfa::from_parts(alphabet, table, 0, accepting)
}

/// Greedy left-to-right check that the pattern is a subsequence of `word`.
pub fn word_in_shuffle_ideal(spec: &PtSpec, word: &[Symbol]) -> Result<bool, DfaError> {
    let pattern = spec.letters();
    let mut matched = 0;
    for &s in word {
        if !spec.alphabet().contains(&s) {
            return Err(DfaError::ForeignSymbol(s));
        }
        if matched < pattern.len() && pattern[matched] == s {
            matched += 1;
        }
    }
    Ok(matched == pattern.len())
}
