use std::fmt;

use crate::algebra::{
    is_j_trivial, letters_idempotent, transition_monoid_with_cap, MonoidError, DEFAULT_ELEMENT_CAP,
};
use crate::automata::{is_literally_idempotent, is_partially_ordered, minimize, Dfa};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    NotLi,
    NotPt,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::NotLi => "NOT_LI",
            FailureReason::NotPt => "NOT_PT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnosis {
    pub minimal_state_count: usize,
    pub literally_idempotent: bool,
    pub partially_ordered: bool,
    pub piecewise_testable: bool,
    pub verdict: bool,
    pub failure_reason: Option<FailureReason>,
}

impl fmt::Display for Diagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "minimal_states: {}", self.minimal_state_count)?;
        writeln!(f, "literally_idempotent: {}", self.literally_idempotent)?;
        writeln!(f, "partially_ordered: {}", self.partially_ordered)?;
        writeln!(f, "piecewise_testable: {}", self.piecewise_testable)?;
        match self.failure_reason {
            None => {
                writeln!(f, "failure_reason: none")?;
                writeln!(f, "verdict: MEMBER")
            }
            Some(r) => {
                writeln!(f, "failure_reason: {r}")?;
                writeln!(f, "verdict: NON-MEMBER ({r})")
            }
        }
    }
}

/// Whether, for every state `q` and letters `a ≠ b`, the states `q·a` and
/// `q·b` can be joined by some word over `{a, b}`.
///
/// On a minimal partially ordered DFA this local confluence is equivalent to
/// piecewise testability (a reformulation of the unique-maximal-state
/// criterion of Klíma and Polák).
fn is_locally_confluent(dfa: &Dfa) -> bool {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    // Generation-stamped marks avoid clearing between searches.
    let mut mark = vec![0u32; n];
    let mut generation = 0u32;
    let mut stack = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            for q in 0..n {
                let (qa, qb) = (dfa.next(q, a), dfa.next(q, b));
                if qa == qb {
                    continue;
                }
                generation += 1;
                stack.push(qa);
                mark[qa] = generation;
                while let Some(p) = stack.pop() {
                    for t in [dfa.next(p, a), dfa.next(p, b)] {
                        if mark[t] != generation {
                            mark[t] = generation;
                            stack.push(t);
                        }
                    }
                }
                let meet_mark = generation;
                generation += 1;
                let mut met = mark[qb] == meet_mark;
                if !met {
                    stack.push(qb);
                    mark[qb] = generation;
                }
                while let Some(p) = stack.pop() {
                    for t in [dfa.next(p, a), dfa.next(p, b)] {
                        if mark[t] == meet_mark {
                            met = true;
                            stack.clear();
                            break;
                        }
                        if mark[t] != generation {
                            mark[t] = generation;
                            stack.push(t);
                        }
                    }
                }
                if !met {
                    return false;
                }
            }
        }
    }
    true
}

/// Piecewise testability of the language of a minimal DFA, decided on the
/// automaton: partially ordered and locally confluent. Runs in
/// `O(|Q|² · |Σ|²)` without building the syntactic monoid.
pub fn is_piecewise_testable(min_dfa: &Dfa) -> bool {
    is_partially_ordered(min_dfa) && is_locally_confluent(min_dfa)
}

/// Piecewise testability via J-triviality of the syntactic monoid.
pub fn is_piecewise_testable_by_monoid(min_dfa: &Dfa) -> Result<bool, MonoidError> {
    if !is_partially_ordered(min_dfa) {
        return Ok(false);
    }
    Ok(is_j_trivial(&transition_monoid_with_cap(
        min_dfa,
        DEFAULT_ELEMENT_CAP,
    )?))
}

/// Minimize, then check literal idempotency, then piecewise testability.
pub fn is_lmo_member(dfa: &Dfa) -> Diagnosis {
    let min = minimize(dfa);
    let literally_idempotent = is_literally_idempotent(&min);
    let partially_ordered = is_partially_ordered(&min);
    let piecewise_testable = partially_ordered && is_locally_confluent(&min);
    let failure_reason = if !literally_idempotent {
        Some(FailureReason::NotLi)
    } else if !piecewise_testable {
        Some(FailureReason::NotPt)
    } else {
        None
    };
    Diagnosis {
        minimal_state_count: min.state_count(),
        literally_idempotent,
        partially_ordered,
        piecewise_testable,
        verdict: failure_reason.is_none(),
        failure_reason,
    }
}

/// Independent decision through the syntactic monoid: J-trivial with every
/// letter mapped to an idempotent.
pub fn lmo_oracle(dfa: &Dfa) -> Result<bool, MonoidError> {
    lmo_oracle_with_cap(dfa, DEFAULT_ELEMENT_CAP)
}

pub fn lmo_oracle_with_cap(dfa: &Dfa, cap: usize) -> Result<bool, MonoidError> {
    let m = transition_monoid_with_cap(&minimize(dfa), cap)?;
    Ok(is_j_trivial(&m) && letters_idempotent(&m))
}
