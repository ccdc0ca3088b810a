//! Canonical forms for small relations by individualization and refinement.
//! Used to decide isomorphism of graphs and posets with at most 16 vertices.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poset::FinitePoset;

pub const MAX_CANON_VERTICES: usize = 16;

/// Rows of the relation under the canonical relabelling.
pub type CanonicalForm = Vec<u32>;

struct Relation {
    n: usize,
    out: Vec<u32>,
    inc: Vec<u32>,
}

impl Relation {
    fn new(n: usize, out: Vec<u32>) -> Self {
        let mut inc = vec![0u32; n];
        for (u, &row) in out.iter().enumerate() {
            for (v, slot) in inc.iter_mut().enumerate() {
                if row >> v & 1 == 1 {
                    *slot |= 1 << u;
                }
            }
        }
        Self { n, out, inc }
    }

    fn signature(&self, v: usize, cells: &[Vec<usize>]) -> Vec<(u32, u32)> {
        cells
            .iter()
            .map(|c| {
                let mask = c.iter().fold(0u32, |m, &x| m | 1 << x);
                (
                    (self.out[v] & mask).count_ones(),
                    (self.inc[v] & mask).count_ones(),
                )
            })
            .collect()
    }

    /// Splits cells until every vertex of a cell sees every cell the same way.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(u32, u32)>, usize)> = cell
                    .iter()
                    .map(|&v| (self.signature(v, &cells), v))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|k| k.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = |row: u32| row & !(1 << u) & !(1 << v);
        strip(self.out[u]) == strip(self.out[v])
            && strip(self.inc[u]) == strip(self.inc[v])
            && (self.out[u] >> v & 1) == (self.out[v] >> u & 1)
            && (self.out[u] >> u & 1) == (self.out[v] >> v & 1)
    }

    fn leaf(&self, cells: &[Vec<usize>]) -> CanonicalForm {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order
            .iter()
            .map(|&v| {
                let mut row = 0u32;
                for w in 0..self.n {
                    if self.out[v] >> w & 1 == 1 {
                        row |= 1 << pos[w];
                    }
                }
                row
            })
            .collect()
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<CanonicalForm>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let form = self.leaf(&cells);
            if best.as_ref().is_none_or(|b| form < *b) {
                *best = Some(form);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&x| x != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            self.search(next, best);
        }
    }

    fn canonical(&self) -> CanonicalForm {
        if self.n == 0 {
            return Vec::new();
        }
        let mut best = None;
        self.search(vec![(0..self.n).collect()], &mut best);
        best.expect("at least one leaf")
    }
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge {
            size: n,
            limit: MAX_CANON_VERTICES,
        });
    }
    Ok(())
}

pub fn canonical_graph(g: &SimpleGraph) -> Result<CanonicalForm> {
    guard(g.len())?;
    let rows = (0..g.len())
        .map(|v| g.neighbors(v).ones().fold(0u32, |m, w| m | 1 << w))
        .collect();
    Ok(Relation::new(g.len(), rows).canonical())
}

pub fn canonical_poset(p: &FinitePoset) -> Result<CanonicalForm> {
    guard(p.len())?;
    let rows = (0..p.len())
        .map(|a| {
            (0..p.len())
                .filter(|&b| p.le(a, b))
                .fold(0u32, |m, b| m | 1 << b)
        })
        .collect();
    Ok(Relation::new(p.len(), rows).canonical())
}

pub fn graphs_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    if g.len() != h.len() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_graph(g)? == canonical_graph(h)?)
}

pub fn posets_isomorphic(p: &FinitePoset, q: &FinitePoset) -> Result<bool> {
    if p.len() != q.len() {
        return Ok(false);
    }
    Ok(canonical_poset(p)? == canonical_poset(q)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, path_graph};
    use crate::poset::{make_boolean, make_chain, make_chain_product};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn permuted(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
        let mut h = SimpleGraph::with_vertices("p", g.len());
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]).unwrap();
        }
        h
    }

    #[test]
    fn permutations_share_a_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [
            cycle_graph(7),
            complete_bipartite(3, 4),
            path_graph(6),
            cycle_graph(5).complement(),
        ] {
            let mut perm: Vec<usize> = (0..g.len()).collect();
            for _ in 0..5 {
                perm.shuffle(&mut rng);
                assert!(graphs_isomorphic(&g, &permuted(&g, &perm)).unwrap());
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        // same degree sequence: C6 vs two triangles
        let two_triangles = SimpleGraph::from_edges(
            "t",
            (0..6).map(|i| i.to_string()).collect(),
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        assert!(!graphs_isomorphic(&cycle_graph(6), &two_triangles).unwrap());
        assert!(!graphs_isomorphic(&path_graph(4), &complete_bipartite(1, 3)).unwrap());
    }

    #[test]
    fn self_dual_posets() {
        let c3 = make_chain(3).unwrap();
        assert!(posets_isomorphic(&c3, &c3.dual().unwrap()).unwrap());
        let b3 = make_boolean(3).unwrap();
        assert!(posets_isomorphic(&b3, &b3.dual().unwrap()).unwrap());
        let c32 = make_chain_product(&[3, 2]).unwrap();
        assert!(posets_isomorphic(&c32, &c32.dual().unwrap()).unwrap());
        assert!(!posets_isomorphic(&make_chain(4).unwrap(), &make_boolean(2).unwrap()).unwrap());
    }

    #[test]
    fn size_guard() {
        assert!(canonical_graph(&cycle_graph(17)).is_err());
    }
}
