use std::collections::{HashMap, VecDeque};

use super::{Dfa, DfaError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BoolOp {
    pub const ALL: [BoolOp; 4] = [
        BoolOp::Union,
        BoolOp::Intersection,
        BoolOp::Difference,
        BoolOp::SymmetricDifference,
    ];

    fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BoolOp::Union => a || b,
            BoolOp::Intersection => a && b,
            BoolOp::Difference => a && !b,
            BoolOp::SymmetricDifference => a != b,
        }
    }
}

pub fn complement(dfa: &Dfa) -> Dfa {
    dfa.complement()
}

/// Pairing construction over the reachable pairs. Both automata must use the
/// same symbol set; the result uses `d1`'s symbol order.
pub fn product(d1: &Dfa, d2: &Dfa, op: BoolOp) -> Result<Dfa, DfaError> {
    let k = d1.alphabet().len();
    let mut remap = Vec::with_capacity(k);
    for &s in d1.alphabet() {
        remap.push(d2.symbol_index(s).ok_or(DfaError::AlphabetMismatch)?);
    }
    if d2.alphabet().len() != k {
        return Err(DfaError::AlphabetMismatch);
    }

    let start = (d1.initial(), d2.initial());
    let mut ids = HashMap::from([(start, 0usize)]);
    let mut pairs = vec![start];
    let mut queue = VecDeque::from([start]);
    let mut table = Vec::new();
    while let Some((p, q)) = queue.pop_front() {
        for (i, &j) in remap.iter().enumerate() {
            let t = (d1.next(p, i), d2.next(q, j));
            let id = *ids.entry(t).or_insert_with(|| {
                pairs.push(t);
                queue.push_back(t);
                pairs.len() - 1
            });
            table.push(id);
        }
    }
    let accepting = pairs
        .iter()
        .map(|&(p, q)| op.apply(d1.is_accepting(p), d2.is_accepting(q)))
        .collect();
    Ok(Dfa::from_parts(d1.alphabet().to_vec(), table, 0, accepting))
}

/// Whether some accepting state is reachable from the initial state.
pub fn is_empty(dfa: &Dfa) -> bool {
    !dfa.reachable_bfs().into_iter().any(|q| dfa.is_accepting(q))
}

/// Language equality, decided by emptiness of both differences.
pub fn equivalent(d1: &Dfa, d2: &Dfa) -> Result<bool, DfaError> {
    Ok(is_empty(&product(d1, d2, BoolOp::Difference)?)
        && is_empty(&product(d2, d1, BoolOp::Difference)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(sym_index: usize) -> Dfa {
        let mut rows = vec![vec![0, 0], vec![1, 1]];
        rows[0][sym_index] = 1;
        Dfa::new(vec!['a', 'b'], rows, 0, [1]).unwrap()
    }

    fn w(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn complement_of_contains_a_is_b_star() {
        let c = complement(&contains(0));
        for (word, expect) in [("", true), ("bbb", true), ("a", false), ("bba", false)] {
            assert_eq!(c.accepts(&w(word)).unwrap(), expect, "{word}");
        }
    }

    #[test]
    fn intersection_needs_both_letters() {
        let both = product(&contains(0), &contains(1), BoolOp::Intersection).unwrap();
        assert!(both.accepts(&w("ab")).unwrap());
        assert!(both.accepts(&w("ba")).unwrap());
        assert!(!both.accepts(&w("aa")).unwrap());
        assert!(!both.accepts(&w("")).unwrap());
    }

    #[test]
    fn alphabet_mismatch() {
        let other = Dfa::new(vec!['a', 'c'], vec![vec![0, 0]], 0, [0]).unwrap();
        assert_eq!(
            product(&contains(0), &other, BoolOp::Union),
            Err(DfaError::AlphabetMismatch)
        );
        let shorter = Dfa::new(vec!['a'], vec![vec![0]], 0, [0]).unwrap();
        assert!(product(&shorter, &contains(0), BoolOp::Union).is_err());
    }

    #[test]
    fn symbol_order_may_differ() {
        let ba = Dfa::new(vec!['b', 'a'], vec![vec![0, 1], vec![1, 1]], 0, [1]).unwrap();
        assert!(equivalent(&ba, &contains(0)).unwrap());
        assert!(!equivalent(&ba, &contains(1)).unwrap());
    }

    #[test]
    fn equivalence_distinguishes_languages() {
        assert!(equivalent(&contains(0), &contains(0)).unwrap());
        assert!(!equivalent(&contains(0), &contains(0).complement()).unwrap());
    }
}
