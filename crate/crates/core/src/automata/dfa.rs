use std::collections::VecDeque;

use super::DfaError;
use crate::Symbol;

pub type State = usize;

/// A total deterministic finite automaton over an ordered alphabet.
///
/// Transitions are stored as a dense `state_count × alphabet.len()` table;
/// symbols are addressed by their index in `alphabet`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<Symbol>,
    table: Vec<State>,
    initial: State,
    accepting: Vec<bool>,
}

impl Dfa {
    /// `transitions[q][i]` is the target of state `q` on `alphabet[i]`.
    pub fn new(
        alphabet: Vec<Symbol>,
        transitions: Vec<Vec<State>>,
        initial: State,
        accepting: impl IntoIterator<Item = State>,
    ) -> Result<Self, DfaError> {
        let n = transitions.len();
        if n == 0 {
            return Err(DfaError::NoStates);
        }
        for (i, s) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(s) {
                return Err(DfaError::DuplicateSymbol(*s));
            }
        }
        let mut table = Vec::with_capacity(n * alphabet.len());
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(DfaError::RowLength {
                    state: q,
                    expected: alphabet.len(),
                    found: row.len(),
                });
            }
            for &t in row {
                if t >= n {
                    return Err(DfaError::StateOutOfRange(t, n));
                }
                table.push(t);
            }
        }
        if initial >= n {
            return Err(DfaError::StateOutOfRange(initial, n));
        }
        let mut acc = vec![false; n];
        for q in accepting {
            if q >= n {
                return Err(DfaError::StateOutOfRange(q, n));
            }
            acc[q] = true;
        }
        Ok(Dfa {
            alphabet,
            table,
            initial,
            accepting: acc,
        })
    }

    /// Builds from an already-flattened table. The caller guarantees every
    /// invariant.
    pub(crate) fn from_parts(
        alphabet: Vec<Symbol>,
        table: Vec<State>,
        initial: State,
        accepting: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(table.len(), accepting.len() * alphabet.len());
        debug_assert!(initial < accepting.len());
        debug_assert!(table.iter().all(|&t| t < accepting.len()));
        Dfa {
            alphabet,
            table,
            initial,
            accepting,
        }
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = State> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(q, _)| q)
    }

    pub fn symbol_index(&self, sym: Symbol) -> Option<usize> {
        self.alphabet.iter().position(|&s| s == sym)
    }

    /// Target of `q` on the symbol with index `i`.
    #[inline]
    pub fn next(&self, q: State, i: usize) -> State {
        self.table[q * self.alphabet.len() + i]
    }

    pub fn step(&self, q: State, sym: Symbol) -> Result<State, DfaError> {
        let i = self.symbol_index(sym).ok_or(DfaError::ForeignSymbol(sym))?;
        Ok(self.next(q, i))
    }

    /// Symbol indices of `word`, rejecting symbols outside the alphabet.
    pub fn encode(&self, word: &[Symbol]) -> Result<Vec<usize>, DfaError> {
        word.iter()
            .map(|&s| self.symbol_index(s).ok_or(DfaError::ForeignSymbol(s)))
            .collect()
    }

    /// The state reached from `q` after reading `word`.
    pub fn run_from(&self, q: State, word: &[Symbol]) -> Result<State, DfaError> {
        word.iter().try_fold(q, |q, &s| self.step(q, s))
    }

    /// The sequence of states visited from the initial state, including it.
    pub fn trace(&self, word: &[Symbol]) -> Result<Vec<State>, DfaError> {
        let mut q = self.initial;
        let mut out = vec![q];
        for &s in word {
            q = self.step(q, s)?;
            out.push(q);
        }
        Ok(out)
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool, DfaError> {
        Ok(self.accepting[self.run_from(self.initial, word)?])
    }

    /// States reachable from the initial state, in breadth-first order over
    /// the ordered alphabet.
    pub fn reachable_bfs(&self) -> Vec<State> {
        let mut seen = vec![false; self.state_count()];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for i in 0..self.alphabet.len() {
                let t = self.next(q, i);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Drops unreachable states and renumbers the rest by breadth-first
    /// discovery over the ordered alphabet.
    pub fn canonical(&self) -> Dfa {
        let order = self.reachable_bfs();
        let mut rename = vec![usize::MAX; self.state_count()];
        for (new, &old) in order.iter().enumerate() {
            rename[old] = new;
        }
        let k = self.alphabet.len();
        let mut table = Vec::with_capacity(order.len() * k);
        for &old in &order {
            for i in 0..k {
                table.push(rename[self.next(old, i)]);
            }
        }
        let accepting = order.iter().map(|&q| self.accepting[q]).collect();
        Dfa::from_parts(self.alphabet.clone(), table, 0, accepting)
    }

    /// The same automaton with the accepting set flipped.
    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|a| !a).collect(),
            ..self.clone()
        }
    }
}
