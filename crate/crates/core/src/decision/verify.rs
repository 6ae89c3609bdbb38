use std::fmt;

use crate::automata::{count_words_up_to, word_in_shuffle_ideal};
use crate::quantum::{build_mon1qfa, cutpoint_params, DensityMatrix, PtSpec, EPS};
use crate::Symbol;

use super::DecisionError;

/// Default limit on the number of words [`verify_construction`] enumerates.
pub const DEFAULT_WORD_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub spec: PtSpec,
    pub lambda: f64,
    pub delta: f64,
    pub max_len: usize,
    pub words_checked: u64,
    pub misclassified: Vec<Vec<Symbol>>,
    pub isolation_violations: Vec<Vec<Symbol>>,
    pub min_margin: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.misclassified.is_empty() && self.isolation_violations.is_empty()
    }
}

fn render_words(words: &[Vec<Symbol>]) -> String {
    if words.is_empty() {
        return "none".to_string();
    }
    words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "ε".to_string()
            } else {
                w.iter().collect()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: String = self.spec.letters().iter().collect();
        let alphabet: String = self.spec.alphabet().iter().collect();
        writeln!(f, "letters: {letters}")?;
        writeln!(f, "alphabet: {alphabet}")?;
        writeln!(f, "lambda: {:.12}", self.lambda)?;
        writeln!(f, "delta: {:.12}", self.delta)?;
        writeln!(f, "max_len: {}", self.max_len)?;
        writeln!(f, "words_checked: {}", self.words_checked)?;
        writeln!(f, "min_margin: {:.12}", self.min_margin)?;
        writeln!(f, "misclassified: {}", render_words(&self.misclassified))?;
        writeln!(
            f,
            "isolation_violations: {}",
            render_words(&self.isolation_violations)
        )?;
        writeln!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn verify_construction(
    spec: &PtSpec,
    max_len: usize,
) -> Result<VerificationReport, DecisionError> {
    verify_construction_with_budget(spec, max_len, DEFAULT_WORD_BUDGET)
}

/// Simulates `A[spec]` on every word of length at most `max_len` and checks
/// it against the subsequence test with the cut point `(λ, δ)` of the
/// construction. Violation lists are in length-lexicographic order.
pub fn verify_construction_with_budget(
    spec: &PtSpec,
    max_len: usize,
    budget: u64,
) -> Result<VerificationReport, DecisionError> {
    let total = count_words_up_to(spec.alphabet().len(), max_len);
    match total {
        Some(t) if t <= budget => {}
        _ => {
            return Err(DecisionError::Budget {
                words: total,
                budget,
            })
        }
    }
    let automaton = build_mon1qfa(spec)?;
    let (lambda, delta) = cutpoint_params(spec);
    let alphabet = spec.alphabet();

    let mut misclassified = Vec::new();
    let mut isolation_violations = Vec::new();
    let mut min_margin = f64::INFINITY;
    let mut words_checked = 0u64;

    // Depth-first over the word tree, sharing the state of each prefix.
    let mut word: Vec<Symbol> = Vec::with_capacity(max_len);
    let mut stack: Vec<(DensityMatrix, usize)> = vec![(automaton.initial_state(), 0)];
    let mut fresh = true;
    while let Some((rho, next_child)) = stack.last_mut() {
        if fresh {
            fresh = false;
            words_checked += 1;
            let p = automaton.accepting_mass(rho);
            let member = word_in_shuffle_ideal(spec, &word)?;
            let margin = (p - lambda).abs();
            min_margin = min_margin.min(margin);
            if (p > lambda) != member {
                misclassified.push(word.clone());
            }
            if margin < delta - EPS {
                isolation_violations.push(word.clone());
            }
        }
        if word.len() == max_len || *next_child == alphabet.len() {
            stack.pop();
            word.pop();
            continue;
        }
        let sym = alphabet[*next_child];
        *next_child += 1;
        let child = automaton.step(rho, sym)?;
        word.push(sym);
        stack.push((child, 0));
        fresh = true;
    }
    let shortlex = |w: &Vec<Symbol>| {
        (
            w.len(),
            w.iter()
                .map(|s| alphabet.iter().position(|a| a == s))
                .collect::<Vec<_>>(),
        )
    };
    misclassified.sort_by_key(shortlex);
    isolation_violations.sort_by_key(shortlex);

    Ok(VerificationReport {
        spec: spec.clone(),
        lambda,
        delta,
        max_len,
        words_checked,
        misclassified,
        isolation_violations,
        min_margin,
    })
}
