use std::fmt;

use petgraph::algo::kosaraju_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::{transition_monoid_with_cap, FiniteMonoid, MonoidError, DEFAULT_ELEMENT_CAP};
use crate::automata::Dfa;

#[derive(Clone, Copy)]
enum Side {
    Right,
    Left,
    Both,
}

/// Component id per element of the Cayley graph on the chosen side(s).
/// Mutual reachability there is the R, L or J relation respectively.
fn classes(m: &FiniteMonoid, side: Side) -> Vec<usize> {
    let n = m.size();
    let k = m.alphabet().len();
    let mut g = DiGraph::<(), ()>::with_capacity(n, n * k * 2);
    for _ in 0..n {
        g.add_node(());
    }
    for e in 0..n {
        for i in 0..k {
            if matches!(side, Side::Right | Side::Both) {
                g.add_edge(NodeIndex::new(e), NodeIndex::new(m.right_mul(e, i)), ());
            }
            if matches!(side, Side::Left | Side::Both) {
                g.add_edge(NodeIndex::new(e), NodeIndex::new(m.left_mul(e, i)), ());
            }
        }
    }
    let mut class = vec![0; n];
    for (c, comp) in kosaraju_scc(&g).into_iter().enumerate() {
        for v in comp {
            class[v.index()] = c;
        }
    }
    class
}

fn all_singletons(class: &[usize]) -> bool {
    let mut seen = vec![false; class.len()];
    class
        .iter()
        .all(|&c| !std::mem::replace(&mut seen[c], true))
}

fn at_most_one_idempotent_per_class(m: &FiniteMonoid, class: &[usize]) -> bool {
    let mut seen = vec![false; class.len()];
    (0..m.size())
        .filter(|&e| m.is_idempotent(e))
        .all(|e| !std::mem::replace(&mut seen[class[e]], true))
}

/// `aM = bM ⇒ a = b`.
pub fn is_r_trivial(m: &FiniteMonoid) -> bool {
    all_singletons(&classes(m, Side::Right))
}

/// `Ma = Mb ⇒ a = b`.
pub fn is_l_trivial(m: &FiniteMonoid) -> bool {
    all_singletons(&classes(m, Side::Left))
}

/// `MaM = MbM ⇒ a = b`.
pub fn is_j_trivial(m: &FiniteMonoid) -> bool {
    all_singletons(&classes(m, Side::Both))
}

/// Every R-class and every L-class holds at most one idempotent.
pub fn is_block_group(m: &FiniteMonoid) -> bool {
    at_most_one_idempotent_per_class(m, &classes(m, Side::Right))
        && at_most_one_idempotent_per_class(m, &classes(m, Side::Left))
}

/// `φ(σ)² = φ(σ)` for every letter.
pub fn letters_idempotent(m: &FiniteMonoid) -> bool {
    m.generator_indices().iter().all(|&g| m.is_idempotent(g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenReport {
    pub monoid_size: usize,
    pub r_trivial: bool,
    pub l_trivial: bool,
    pub j_trivial: bool,
    pub block_group: bool,
    pub letters_idempotent: bool,
    pub idempotent_count: usize,
}

impl GreenReport {
    pub fn of(m: &FiniteMonoid) -> Self {
        GreenReport {
            monoid_size: m.size(),
            r_trivial: is_r_trivial(m),
            l_trivial: is_l_trivial(m),
            j_trivial: is_j_trivial(m),
            block_group: is_block_group(m),
            letters_idempotent: letters_idempotent(m),
            idempotent_count: (0..m.size()).filter(|&e| m.is_idempotent(e)).count(),
        }
    }

    /// `J-trivial ⇒ R- and L-trivial` and `R-trivial ⇒ block group`.
    pub fn is_consistent(&self) -> bool {
        (!self.j_trivial || (self.r_trivial && self.l_trivial))
            && (!self.r_trivial || self.block_group)
    }
}

impl fmt::Display for GreenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size: {}", self.monoid_size)?;
        writeln!(f, "idempotents: {}", self.idempotent_count)?;
        writeln!(f, "r_trivial: {}", self.r_trivial)?;
        writeln!(f, "l_trivial: {}", self.l_trivial)?;
        writeln!(f, "j_trivial: {}", self.j_trivial)?;
        writeln!(f, "block_group: {}", self.block_group)?;
        writeln!(f, "letters_idempotent: {}", self.letters_idempotent)
    }
}

pub fn green_report(min_dfa: &Dfa) -> Result<GreenReport, MonoidError> {
    green_report_with_cap(min_dfa, DEFAULT_ELEMENT_CAP)
}

pub fn green_report_with_cap(min_dfa: &Dfa, cap: usize) -> Result<GreenReport, MonoidError> {
    let m = transition_monoid_with_cap(min_dfa, cap)?;
    Ok(GreenReport::of(&m))
}
