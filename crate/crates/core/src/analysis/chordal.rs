//! Chordality by Lex-BFS and perfect-elimination verification.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Chordality {
    /// Perfect elimination ordering: each vertex's later neighbours form a clique.
    Chordal { elimination_order: Vec<usize> },
    /// Chordless cycle of length at least four, in cycle order.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Lex-BFS visiting order by partition refinement; ties go to the lowest index.
pub fn lex_bfs(g: &SimpleGraph) -> Vec<usize> {
    let n = g.len();
    let mut cells: VecDeque<Vec<usize>> = VecDeque::new();
    if n > 0 {
        cells.push_back((0..n).collect());
    }
    let mut order = Vec::with_capacity(n);
    while let Some(mut first) = cells.pop_front() {
        let v = first.remove(0);
        if !first.is_empty() {
            cells.push_front(first);
        }
        order.push(v);
        let nb = g.neighbors(v);
        let mut next = VecDeque::with_capacity(cells.len() * 2);
        for cell in cells.drain(..) {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                cell.into_iter().partition(|&w| nb.contains(w));
            if !inside.is_empty() {
                next.push_back(inside);
            }
            if !outside.is_empty() {
                next.push_back(outside);
            }
        }
        cells = next;
    }
    order
}

/// Returns the first vertex of `order` whose later neighbours are not a clique.
pub fn check_elimination_order(g: &SimpleGraph, order: &[usize]) -> Option<usize> {
    let n = g.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).ones().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return Some(v);
        }
    }
    None
}

/// Shortest `u`-`w` path avoiding `blocked`, as a vertex list.
fn shortest_path(g: &SimpleGraph, u: usize, w: usize, blocked: &FixedBitSet) -> Option<Vec<usize>> {
    let n = g.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([u]);
    prev[u] = u;
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x).ones() {
            if prev[y] == usize::MAX && !blocked.contains(y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Chordless cycle through `v` using its non-adjacent neighbours `u`, `w`.
fn cycle_through(g: &SimpleGraph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let mut blocked = g.neighbors(v).clone();
    blocked.insert(v);
    blocked.set(u, false);
    blocked.set(w, false);
    let path = shortest_path(g, u, w, &blocked)?;
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

fn find_chordless_cycle(g: &SimpleGraph, hint: usize, order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0usize; g.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let later: Vec<usize> = g
        .neighbors(hint)
        .ones()
        .filter(|&w| pos[w] > pos[hint])
        .collect();
    for (i, &u) in later.iter().enumerate() {
        for &w in &later[i + 1..] {
            if !g.has_edge(u, w) {
                if let Some(c) = cycle_through(g, hint, u, w) {
                    return c;
                }
            }
        }
    }
    // A chordless cycle passes through some vertex and two of its
    // non-adjacent neighbours, with the rest of it avoiding that vertex's
    // other neighbours, so this scan always succeeds on a non-chordal graph.
    for v in 0..g.len() {
        let nb: Vec<usize> = g.neighbors(v).ones().collect();
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    if let Some(c) = cycle_through(g, v, u, w) {
                        return c;
                    }
                }
            }
        }
    }
    unreachable!("elimination check failed on a chordal graph")
}

pub fn chordality(g: &SimpleGraph) -> Chordality {
    let mut order = lex_bfs(g);
    order.reverse();
    match check_elimination_order(g, &order) {
        None => Chordality::Chordal {
            elimination_order: order,
        },
        Some(v) => Chordality::NotChordal {
            cycle: find_chordless_cycle(g, v, &order),
        },
    }
}

pub fn is_chordal(g: &SimpleGraph) -> bool {
    chordality(g).is_chordal()
}

/// True iff `cycle` (length >= 4) is an induced cycle of `g` in the given order.
pub fn is_chordless_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut seen = FixedBitSet::with_capacity(g.len());
    for &v in cycle {
        if v >= g.len() || seen.put(v) {
            return false;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, path_graph};
    use proptest::prelude::*;

    /// Exhaustive oracle: some vertex subset of size >= 4 induces a cycle.
    fn has_induced_long_cycle(g: &SimpleGraph) -> bool {
        let n = g.len();
        assert!(n <= 12);
        for mask in 0u32..1 << n {
            if mask.count_ones() < 4 {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let all_deg2 = vs
                .iter()
                .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2);
            if !all_deg2 {
                continue;
            }
            // connected 2-regular induced subgraph is a cycle
            let mut seen = vec![vs[0]];
            let mut stack = vec![vs[0]];
            while let Some(x) = stack.pop() {
                for &y in &vs {
                    if g.has_edge(x, y) && !seen.contains(&y) {
                        seen.push(y);
                        stack.push(y);
                    }
                }
            }
            if seen.len() == vs.len() {
                return true;
            }
        }
        false
    }

    fn graph_from_bits(n: usize, bits: &[bool]) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices("r", n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    g.add_edge(u, v).unwrap();
                }
                k += 1;
            }
        }
        g
    }

    #[test]
    fn four_cycle_is_its_own_witness() {
        let c4 = cycle_graph(4);
        match chordality(&c4) {
            Chordality::NotChordal { cycle } => {
                assert_eq!(cycle.len(), 4);
                assert!(is_chordless_cycle(&c4, &cycle));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn known_graphs() {
        assert!(is_chordal(&complete_graph(5)));
        assert!(is_chordal(&path_graph(6)));
        assert!(is_chordal(&SimpleGraph::with_vertices("null", 0)));
        assert!(!is_chordal(&complete_bipartite(2, 2)));
        assert!(is_chordal(&complete_bipartite(1, 4)));
        assert!(!is_chordal(&cycle_graph(7)));
    }

    #[test]
    fn lex_bfs_prefers_low_indices() {
        assert_eq!(lex_bfs(&path_graph(4)), vec![0, 1, 2, 3]);
        assert_eq!(lex_bfs(&complete_bipartite(2, 2)), vec![0, 2, 3, 1]);
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive_oracle(n in 1usize..=9, bits in prop::collection::vec(any::<bool>(), 36)) {
            let g = graph_from_bits(n, &bits);
            let c = chordality(&g);
            prop_assert_eq!(c.is_chordal(), !has_induced_long_cycle(&g));
            match c {
                Chordality::Chordal { elimination_order } => {
                    prop_assert_eq!(check_elimination_order(&g, &elimination_order), None);
                }
                Chordality::NotChordal { cycle } => prop_assert!(is_chordless_cycle(&g, &cycle)),
            }
        }
    }
}
