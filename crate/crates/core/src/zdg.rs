//! Zero-divisor graphs of posets and the two neighbourhood reductions.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::graph::SimpleGraph;
use crate::poset::FinitePoset;
use crate::quotient::QuotientPoset;

fn graph_on(p: &FinitePoset, vertices: &[usize], name: String) -> SimpleGraph {
    let labels = vertices.iter().map(|&v| p.label(v).to_string()).collect();
    let mut g = SimpleGraph::new(name, labels).expect("poset labels are distinct");
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            if p.meets_at_zero(a, b) {
                g.add_edge(i, j).expect("valid edge");
            }
        }
    }
    g
}

/// `G(P)`: vertices `Z(P) \ {0}` in element order, `a ~ b` iff `{a,b}^l = {0}`.
pub fn zdg(p: &FinitePoset) -> SimpleGraph {
    let z = p.zero();
    let vertices: Vec<usize> = p.zero_divisors().iter().filter(|&x| x != z).collect();
    graph_on(p, &vertices, format!("G({})", p.name()))
}

/// `G*(P)`: vertices `P \ {0, 1}` (or `P \ {0}` without a top), same edges.
/// This is `G(P)` plus the dense elements other than `1` as isolated vertices.
pub fn zdg_star(p: &FinitePoset) -> SimpleGraph {
    let vertices: Vec<usize> = (0..p.len())
        .filter(|&x| x != p.zero() && Some(x) != p.one())
        .collect();
    graph_on(p, &vertices, format!("G*({})", p.name()))
}

/// Number of dense elements other than the top, i.e. the `m` in `G* = G + I_m`.
pub fn star_isolated_count(p: &FinitePoset) -> usize {
    p.dense_elements()
        .iter()
        .filter(|&x| Some(x) != p.one())
        .count()
}

/// `G([P])`: nonzero, non-dense classes; adjacent iff supports are disjoint.
pub fn quotient_graph(q: &QuotientPoset) -> SimpleGraph {
    let vertices = q.zero_divisor_classes();
    let labels = vertices.iter().map(|&c| q.class(c).label.clone()).collect();
    let mut g = SimpleGraph::new(format!("G([{}])", q.base().name()), labels)
        .expect("class labels are distinct");
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            if q.classes_adjacent(a, b) {
                g.add_edge(i, j).expect("valid edge");
            }
        }
    }
    g
}

/// A reduced graph together with the vertex classes it was built from.
/// Class `k` is reduced vertex `k`; classes are ordered by smallest member and
/// each reduced vertex carries the label of that member.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: SimpleGraph,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

fn reduce_by<F>(g: &SimpleGraph, key: F, tag: &str) -> Reduction
where
    F: Fn(usize) -> FixedBitSet,
{
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; g.len()];
    for v in 0..g.len() {
        let k = key(v);
        let c = *index.entry(k).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(v);
        class_of[v] = c;
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    // adjacency between classes does not depend on the representative
    let graph = g
        .induced_subgraph(&reps)
        .with_name(format!("{}({})", tag, g.name()));
    Reduction {
        graph,
        classes,
        class_of,
    }
}

/// `u ~ v` iff `u = v` or `u`, `v` adjacent with equal punctured
/// neighbourhoods, i.e. equal closed neighbourhoods.
pub fn reduce_simeq_classes(g: &SimpleGraph) -> Reduction {
    reduce_by(
        g,
        |v| {
            let mut row = g.neighbors(v).clone();
            row.insert(v);
            row
        },
        "red",
    )
}

/// `u ~ v` iff `N(u) = N(v)`.
pub fn reduce_theta_classes(g: &SimpleGraph) -> Reduction {
    reduce_by(g, |v| g.neighbors(v).clone(), "theta")
}

pub fn reduce_simeq(g: &SimpleGraph) -> SimpleGraph {
    reduce_simeq_classes(g).graph
}

pub fn reduce_theta(g: &SimpleGraph) -> SimpleGraph {
    reduce_theta_classes(g).graph
}

/// Relabels a reduction of a zero-divisor graph (or its complement) of `P` by
/// the class label of each representative, making it directly comparable
/// with `quotient_graph`.
pub fn relabel_by_class(reduced: &SimpleGraph, q: &QuotientPoset) -> SimpleGraph {
    let p = q.base();
    let labels = reduced
        .labels()
        .iter()
        .map(|l| {
            let x = p
                .index_of(l)
                .expect("reduced vertex labels come from the poset");
            q.class(q.class_of(x)).label.clone()
        })
        .collect();
    let mut h = SimpleGraph::new(reduced.name(), labels).expect("one representative per class");
    for (u, v) in reduced.edges() {
        h.add_edge(u, v).expect("valid edge");
    }
    h
}
