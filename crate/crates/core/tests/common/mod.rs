//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's minimizer or simulator.

#![allow(dead_code)]

use moqfa::automata::Dfa;
use moqfa::decision::random_dfa;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Every total DFA with two states over {a, b}: all transition tables, both
/// initial states and all accepting sets.
pub fn all_two_state_dfas() -> Vec<Dfa> {
    let mut out = Vec::new();
    for bits in 0..16u32 {
        let t = |i: u32| ((bits >> i) & 1) as usize;
        let rows = vec![vec![t(0), t(1)], vec![t(2), t(3)]];
        for initial in 0..2 {
            for acc in 0..4u32 {
                let accepting: Vec<usize> = (0..2).filter(|q| (acc >> q) & 1 == 1).collect();
                out.push(Dfa::new(vec!['a', 'b'], rows.clone(), initial, accepting).unwrap());
            }
        }
    }
    out
}

/// 500 seeded random DFAs with 1..=6 states over 1..=3 letters.
pub fn random_corpus() -> Vec<Dfa> {
    let letters = ['a', 'b', 'c'];
    (0..500u64)
        .map(|seed| {
            let n = 1 + (seed % 6) as usize;
            let k = 1 + ((seed / 6) % 3) as usize;
            random_dfa(seed, n, &letters[..k])
        })
        .collect()
}

pub fn full_corpus() -> Vec<Dfa> {
    let mut c = all_two_state_dfas();
    c.extend(random_corpus());
    c
}

/// Table-filling (Myhill–Nerode) minimization of the reachable part.
/// Returns the quotient automaton; state numbering is arbitrary.
pub fn table_filling_minimize(d: &Dfa) -> Dfa {
    let k = d.alphabet().len();
    // reachable states by plain DFS
    let mut reach = vec![false; d.state_count()];
    let mut stack = vec![d.initial()];
    reach[d.initial()] = true;
    while let Some(q) = stack.pop() {
        for i in 0..k {
            let t = d.next(q, i);
            if !reach[t] {
                reach[t] = true;
                stack.push(t);
            }
        }
    }
    let states: Vec<usize> = (0..d.state_count()).filter(|&q| reach[q]).collect();
    let n = states.len();
    let mut distinct = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            distinct[i][j] = d.is_accepting(states[i]) != d.is_accepting(states[j]);
        }
    }
    let pos = |q: usize| states.iter().position(|&s| s == q).unwrap();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if distinct[i][j] {
                    continue;
                }
                if (0..k).any(|c| distinct[pos(d.next(states[i], c))][pos(d.next(states[j], c))]) {
                    distinct[i][j] = true;
                    changed = true;
                }
            }
        }
    }
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for i in 0..n {
        if class[i] == usize::MAX {
            for j in i..n {
                if !distinct[i][j] {
                    class[j] = reps.len();
                }
            }
            reps.push(i);
        }
    }
    let rows = reps
        .iter()
        .map(|&r| (0..k).map(|c| class[pos(d.next(states[r], c))]).collect())
        .collect();
    let accepting: Vec<usize> = reps
        .iter()
        .enumerate()
        .filter(|(_, &r)| d.is_accepting(states[r]))
        .map(|(c, _)| c)
        .collect();
    Dfa::new(
        d.alphabet().to_vec(),
        rows,
        class[pos(d.initial())],
        accepting,
    )
    .unwrap()
}

/// Brute-force language comparison on all words up to `max_len`.
pub fn agree_up_to(d1: &Dfa, d2: &Dfa, max_len: usize) -> bool {
    moqfa::automata::words_up_to(d1.alphabet(), max_len)
        .all(|w| d1.accepts(&w).unwrap() == d2.accepts(&w).unwrap())
}

/// Acceptance probability of the subsequence automaton for `letters`,
/// evaluated with nalgebra straight from the projector entry formulas
/// (1-based indices as in the construction).
pub fn reference_probability(letters: &[char], word: &[char]) -> f64 {
    let k = letters.len();
    let dim = k + 1;
    let half = Complex64::new(0.5, 0.0);
    let in_pair = |alpha: char, r: usize, s: usize| {
        (1..=k).any(|j| letters[j - 1] == alpha && (r == j || r == j + 1) && (s == j || s == j + 1))
    };
    let up = |alpha: char| {
        DMatrix::from_fn(dim, dim, |r, s| {
            let (r, s) = (r + 1, s + 1);
            if in_pair(alpha, r, s) {
                half
            } else if r == s && !in_pair(alpha, r, r) {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    let down = |alpha: char| {
        DMatrix::from_fn(dim, dim, |r, s| {
            let (r, s) = (r + 1, s + 1);
            if in_pair(alpha, r, s) {
                if r == s {
                    half
                } else {
                    -half
                }
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    let mut rho = DMatrix::<Complex64>::zeros(dim, dim);
    rho[(0, 0)] = Complex64::new(1.0, 0.0);
    for &c in word {
        if letters.contains(&c) {
            let (u, d) = (up(c), down(c));
            rho = &u * &rho * &u + &d * &rho * &d;
        }
    }
    rho[(k, k)].re
}

/// Subsequence test by dynamic programming over pattern prefixes.
pub fn is_subsequence(pattern: &[char], word: &[char]) -> bool {
    let mut matched = vec![false; pattern.len() + 1];
    matched[0] = true;
    for &c in word {
        for j in (0..pattern.len()).rev() {
            if matched[j] && pattern[j] == c {
                matched[j + 1] = true;
            }
        }
    }
    matched[pattern.len()]
}

/// Every pattern of length at most `max_k` over `alphabet` with no two equal
/// adjacent letters, shortest first.
pub fn patterns_up_to(alphabet: &[char], max_k: usize) -> Vec<Vec<char>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<char>> = vec![Vec::new()];
    for _ in 0..max_k {
        let mut next = Vec::new();
        for p in &layer {
            for &c in alphabet {
                if p.last() != Some(&c) {
                    let mut q = p.clone();
                    q.push(c);
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
