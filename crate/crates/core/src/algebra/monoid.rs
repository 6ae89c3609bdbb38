use std::collections::HashMap;

use super::MonoidError;
use crate::automata::Dfa;
use crate::Symbol;

/// Default bound on the number of monoid elements enumerated.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A map from DFA states to DFA states, stored as its image tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Vec<u32>);

impl Transformation {
    pub fn identity(n: usize) -> Self {
        Transformation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Self {
        Transformation(images)
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, q: usize) -> usize {
        self.0[q] as usize
    }

    /// `self` followed by `then`: `q ↦ then(self(q))`. This makes the
    /// transformation of a word `uv` equal to `φ(u).then(φ(v))`.
    pub fn then(&self, then: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&q| then.0[q as usize]).collect())
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.iter().all(|&q| self.0[q as usize] == q)
    }
}

/// The transition monoid of a DFA together with its generating morphism.
///
/// Elements are numbered in discovery order of a breadth-first closure over
/// words in length-lexicographic order, so element 0 is the identity and
/// every element's witness is the shortlex-least word mapping to it.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    alphabet: Vec<Symbol>,
    elements: Vec<Transformation>,
    index: HashMap<Transformation, usize>,
    generators: Vec<usize>,
    // parent[e] = (prefix element, symbol index) of e's witness
    parent: Vec<Option<(usize, usize)>>,
    right: Vec<usize>,
    left: Vec<usize>,
}

impl FiniteMonoid {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn element(&self, e: usize) -> &Transformation {
        &self.elements[e]
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Element index of `φ(σ)`.
    pub fn generator(&self, sym: Symbol) -> Option<usize> {
        self.alphabet
            .iter()
            .position(|&s| s == sym)
            .map(|i| self.generators[i])
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    /// `e · φ(alphabet[i])`.
    pub fn right_mul(&self, e: usize, i: usize) -> usize {
        self.right[e * self.alphabet.len() + i]
    }

    /// `φ(alphabet[i]) · e`.
    pub fn left_mul(&self, e: usize, i: usize) -> usize {
        self.left[e * self.alphabet.len() + i]
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let t = self.elements[a].then(&self.elements[b]);
        self.index[&t]
    }

    /// The shortlex-least word whose transformation is element `e`.
    pub fn shortest_witness(&self, e: usize) -> Vec<Symbol> {
        let mut word = Vec::new();
        let mut cur = e;
        while let Some((prev, i)) = self.parent[cur] {
            word.push(self.alphabet[i]);
            cur = prev;
        }
        word.reverse();
        word
    }

    /// The element a word maps to.
    pub fn evaluate(&self, word: &[Symbol]) -> Option<usize> {
        word.iter().try_fold(self.identity(), |e, &s| {
            let i = self.alphabet.iter().position(|&a| a == s)?;
            Some(self.right_mul(e, i))
        })
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.elements[e].is_idempotent()
    }
}

pub fn transition_monoid(min_dfa: &Dfa) -> Result<FiniteMonoid, MonoidError> {
    transition_monoid_with_cap(min_dfa, DEFAULT_ELEMENT_CAP)
}

/// Closure of the letter transformations under composition, aborting once
/// more than `cap` elements have been found.
pub fn transition_monoid_with_cap(dfa: &Dfa, cap: usize) -> Result<FiniteMonoid, MonoidError> {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    let letters: Vec<Transformation> = (0..k)
        .map(|i| Transformation((0..n).map(|q| dfa.next(q, i) as u32).collect()))
        .collect();

    let id = Transformation::identity(n);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut parent = vec![None];
    let mut right = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        for (i, letter) in letters.iter().enumerate() {
            let t = elements[head].then(letter);
            let id = match index.get(&t) {
                Some(&id) => id,
                None => {
                    if elements.len() >= cap {
                        return Err(MonoidError::TooLarge { cap });
                    }
                    let id = elements.len();
                    index.insert(t.clone(), id);
                    elements.push(t);
                    parent.push(Some((head, i)));
                    id
                }
            };
            right.push(id);
        }
        head += 1;
    }

    let generators: Vec<usize> = letters.iter().map(|g| index[g]).collect();
    let mut left = Vec::with_capacity(elements.len() * k);
    for e in &elements {
        for letter in &letters {
            left.push(index[&letter.then(e)]);
        }
    }
    Ok(FiniteMonoid {
        alphabet: dfa.alphabet().to_vec(),
        elements,
        index,
        generators,
        parent,
        right,
        left,
    })
}
