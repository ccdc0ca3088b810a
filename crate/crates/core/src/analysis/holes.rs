//! Induced odd cycles of length at least five, and perfectness through them.

use fixedbitset::FixedBitSet;

use crate::graph::SimpleGraph;

struct HoleSearch<'a> {
    g: &'a SimpleGraph,
    start: usize,
    path: Vec<usize>,
    // vertices adjacent to some interior path vertex (excluding the start)
    best: Option<Vec<usize>>,
}

impl HoleSearch<'_> {
    fn limit(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |b| b.len())
    }

    fn extend(&mut self, blocked: &FixedBitSet) {
        let last = *self.path.last().expect("nonempty path");
        let s = self.start;
        let g = self.g;
        for x in g.neighbors(last).ones() {
            if x <= s || blocked.contains(x) {
                continue;
            }
            let len = self.path.len() + 1;
            if g.has_edge(x, s) {
                // closing vertex; path[1] < x fixes the direction
                if len >= 5 && len % 2 == 1 && self.path[1] < x && len < self.limit() {
                    let mut cycle = self.path.clone();
                    cycle.push(x);
                    self.best = Some(cycle);
                }
                continue;
            }
            // an open path of len vertices can only close into a cycle of len + 1
            if len + 1 >= self.limit() {
                continue;
            }
            let mut next = blocked.clone();
            next.union_with(g.neighbors(last));
            next.insert(last);
            self.path.push(x);
            self.extend(&next);
            self.path.pop();
        }
    }
}

/// A shortest induced odd cycle of length >= 5, listed from its smallest
/// vertex. Exhaustive over induced paths.
pub fn find_induced_odd_hole(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.len();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        if best.as_ref().is_some_and(|b| b.len() == 5) {
            break;
        }
        for p1 in g.neighbors(s).ones().filter(|&p1| p1 > s) {
            let mut search = HoleSearch {
                g,
                start: s,
                path: vec![s, p1],
                best: best.clone(),
            };
            // interior vertices may not touch s; the start's neighbours
            // other than the closing vertex are excluded by the closing test.
            let mut blocked = FixedBitSet::with_capacity(n);
            blocked.insert(s);
            search.extend(&blocked);
            best = search.best;
        }
    }
    best
}

/// No odd hole in `g` and none in its complement.
pub fn is_perfect(g: &SimpleGraph) -> bool {
    find_induced_odd_hole(g).is_none() && find_induced_odd_hole(&g.complement()).is_none()
}

/// Perfectness with the offending cycle: `(in_complement, cycle)`.
pub fn imperfection_witness(g: &SimpleGraph) -> Option<(bool, Vec<usize>)> {
    if let Some(c) = find_induced_odd_hole(g) {
        return Some((false, c));
    }
    find_induced_odd_hole(&g.complement()).map(|c| (true, c))
}
