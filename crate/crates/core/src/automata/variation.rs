use std::fmt;

use super::{Dfa, DfaError};
use crate::Symbol;

/// `δ(δ(q,a),a) = δ(q,a)` for every state and letter. On a minimal DFA this
/// is exactly the language condition `xa²y ∈ L ⇔ xay ∈ L`.
pub fn is_literally_idempotent(min_dfa: &Dfa) -> bool {
    let k = min_dfa.alphabet().len();
    (0..min_dfa.state_count()).all(|q| {
        (0..k).all(|i| {
            let t = min_dfa.next(q, i);
            min_dfa.next(t, i) == t
        })
    })
}

/// Number of steps of the run on `word` that change state.
pub fn variation(dfa: &Dfa, word: &[Symbol]) -> Result<usize, DfaError> {
    let trace = dfa.trace(word)?;
    Ok(trace.windows(2).filter(|p| p[0] != p[1]).count())
}

/// Supremum of [`variation`] over all words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupVariation {
    Finite(usize),
    Infinite,
}

impl fmt::Display for SupVariation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupVariation::Finite(n) => write!(f, "{n}"),
            SupVariation::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Topological order of the state graph with self-loops removed, or `None`
/// if it has a cycle.
fn change_graph_order(dfa: &Dfa) -> Option<Vec<usize>> {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    let mut indegree = vec![0usize; n];
    for q in 0..n {
        for i in 0..k {
            let t = dfa.next(q, i);
            if t != q {
                indegree[t] += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&q| indegree[q] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        for i in 0..k {
            let t = dfa.next(q, i);
            if t != q {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    order.push(t);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Whether the only cycles of the transition graph are self-loops.
pub fn is_partially_ordered(dfa: &Dfa) -> bool {
    change_graph_order(dfa).is_some()
}

pub fn sup_variation(dfa: &Dfa) -> SupVariation {
    match longest_change_path(dfa) {
        Some(path) => SupVariation::Finite(path.len()),
        None => SupVariation::Infinite,
    }
}

/// A word attaining the finite supremum of the variation, built from a
/// longest path of state changes from the initial state. `None` when the
/// variation is unbounded.
pub fn sup_variation_witness(dfa: &Dfa) -> Option<Vec<Symbol>> {
    longest_change_path(dfa)
}

fn longest_change_path(dfa: &Dfa) -> Option<Vec<Symbol>> {
    let order = change_graph_order(dfa)?;
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    let mut longest = vec![0usize; n];
    let mut choice: Vec<Option<usize>> = vec![None; n];
    for &q in order.iter().rev() {
        for i in 0..k {
            let t = dfa.next(q, i);
            if t != q && longest[t] + 1 > longest[q] {
                longest[q] = longest[t] + 1;
                choice[q] = Some(i);
            }
        }
    }
    let mut word = Vec::with_capacity(longest[dfa.initial()]);
    let mut q = dfa.initial();
    while let Some(i) = choice[q] {
        word.push(dfa.alphabet()[i]);
        q = dfa.next(q, i);
    }
    Some(word)
}
