use std::collections::VecDeque;

use super::Dfa;

/// Partition of `0..n` stored as a permutation with contiguous block ranges,
/// so marking and splitting cost time proportional to the marked elements.
struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    block_of: Vec<usize>,
    start: Vec<usize>,
    end: Vec<usize>,
    marked: Vec<usize>,
}

impl Partition {
    fn new(classes: &[usize], class_count: usize) -> Self {
        let n = classes.len();
        let mut elems: Vec<usize> = (0..n).collect();
        elems.sort_by_key(|&q| classes[q]);
        let mut pos = vec![0; n];
        for (i, &q) in elems.iter().enumerate() {
            pos[q] = i;
        }
        let mut start = Vec::new();
        let mut end = Vec::new();
        let mut block_of = vec![0; n];
        let mut remap = vec![usize::MAX; class_count];
        for (i, &q) in elems.iter().enumerate() {
            let c = classes[q];
            if remap[c] == usize::MAX {
                remap[c] = start.len();
                start.push(i);
                end.push(i);
            }
            let b = remap[c];
            end[b] = i + 1;
            block_of[q] = b;
        }
        let marked = vec![0; start.len()];
        Partition {
            elems,
            pos,
            block_of,
            start,
            end,
            marked,
        }
    }

    fn len(&self) -> usize {
        self.start.len()
    }

    fn size(&self, b: usize) -> usize {
        self.end[b] - self.start[b]
    }

    fn members(&self, b: usize) -> &[usize] {
        &self.elems[self.start[b]..self.end[b]]
    }

    fn mark(&mut self, q: usize) {
        let b = self.block_of[q];
        let target = self.start[b] + self.marked[b];
        let p = self.pos[q];
        if p < target {
            return; // already marked
        }
        let other = self.elems[target];
        self.elems.swap(p, target);
        self.pos[other] = p;
        self.pos[q] = target;
        self.marked[b] += 1;
    }

    /// Splits the marked prefix of `b` off into a new block, if it is a
    /// proper nonempty subset. Returns the new block id.
    fn split(&mut self, b: usize) -> Option<usize> {
        let m = self.marked[b];
        self.marked[b] = 0;
        if m == 0 || m == self.size(b) {
            return None;
        }
        let nb = self.start.len();
        let s = self.start[b];
        self.start.push(s);
        self.end.push(s + m);
        self.marked.push(0);
        self.start[b] = s + m;
        for i in s..s + m {
            self.block_of[self.elems[i]] = nb;
        }
        Some(nb)
    }
}

/// Hopcroft partition refinement followed by canonical renumbering.
///
/// The result has one state per Myhill–Nerode class of the reachable part,
/// numbered by breadth-first discovery over the ordered alphabet, so two
/// automata for the same language minimize to structurally equal values.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let reach = dfa.canonical();
    let n = reach.state_count();
    let k = reach.alphabet().len();

    // inverse[i][t] lists the predecessors of t on symbol i.
    let mut inv_start = vec![vec![0usize; n + 1]; k];
    for q in 0..n {
        for (i, starts) in inv_start.iter_mut().enumerate() {
            starts[reach.next(q, i) + 1] += 1;
        }
    }
    for starts in &mut inv_start {
        for t in 0..n {
            starts[t + 1] += starts[t];
        }
    }
    let mut inv_list = vec![vec![0usize; n]; k];
    let mut fill: Vec<Vec<usize>> = inv_start.iter().map(|s| s[..n].to_vec()).collect();
    for q in 0..n {
        for i in 0..k {
            let t = reach.next(q, i);
            inv_list[i][fill[i][t]] = q;
            fill[i][t] += 1;
        }
    }

    let classes: Vec<usize> = (0..n).map(|q| reach.is_accepting(q) as usize).collect();
    let mut part = Partition::new(&classes, 2);
    let mut pending = vec![Vec::<bool>::new(); k];
    let mut work = VecDeque::new();
    if part.len() == 2 {
        let smaller = if part.size(0) <= part.size(1) { 0 } else { 1 };
        for (i, flags) in pending.iter_mut().enumerate() {
            *flags = vec![false; 2];
            flags[smaller] = true;
            work.push_back((smaller, i));
        }
    }

    let mut touched = Vec::new();
    let mut splitter = Vec::new();
    while let Some((b, i)) = work.pop_front() {
        pending[i][b] = false;
        splitter.clear();
        splitter.extend_from_slice(part.members(b));
        for &t in &splitter {
            for &q in &inv_list[i][inv_start[i][t]..inv_start[i][t + 1]] {
                let qb = part.block_of[q];
                if part.marked[qb] == 0 {
                    touched.push(qb);
                }
                part.mark(q);
            }
        }
        for y in touched.drain(..) {
            let Some(z) = part.split(y) else { continue };
            for (c, flags) in pending.iter_mut().enumerate() {
                flags.push(false);
                let add = if flags[y] || part.size(z) <= part.size(y) {
                    z
                } else {
                    y
                };
                if !flags[add] {
                    flags[add] = true;
                    work.push_back((add, c));
                }
            }
        }
    }

    let blocks = part.len();
    let mut table = vec![0; blocks * k];
    let mut accepting = vec![false; blocks];
    for b in 0..blocks {
        let rep = part.members(b)[0];
        accepting[b] = reach.is_accepting(rep);
        for i in 0..k {
            table[b * k + i] = part.block_of[reach.next(rep, i)];
        }
    }
    let initial = part.block_of[reach.initial()];
    Dfa::from_parts(reach.alphabet().to_vec(), table, initial, accepting).canonical()
}
