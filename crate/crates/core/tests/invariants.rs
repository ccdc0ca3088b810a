//! Property tests over random posets and graphs, through the public API only.

use std::collections::VecDeque;

use proptest::prelude::*;
use zdg_core::algebra::{comaximal_graph, ideal_lattice, intersection_graph, RingSpec};
use zdg_core::canon::{canonical_graph, graphs_isomorphic, posets_isomorphic};
use zdg_core::poset::{make_boolean, make_chain, make_chain_product, PosetJson};
use zdg_core::zdg::relabel_by_class;
use zdg_core::{
    chromatic_number, clique_number, edge_chromatic_number, is_chordal, is_perfect, quotient,
    quotient_graph, reduce_simeq, reduce_theta, zdg, ElementSet, FinitePoset, SimpleGraph,
};

/// A random poset with least element 0: a random DAG on `1..n` (edges only
/// from smaller to larger index), transitively closed, with 0 below all.
fn random_poset(n: usize, bits: &[bool]) -> FinitePoset {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for j in 1..n {
        le[0][j] = true;
    }
    let mut k = 0;
    for i in 1..n {
        for j in i + 1..n {
            if bits[k % bits.len()] {
                le[i][j] = true;
            }
            k += 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][m] && le[m][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    FinitePoset::from_relation("random", labels, |a, b| le[a][b]).unwrap()
}

fn random_graph(n: usize, bits: &[bool]) -> SimpleGraph {
    let mut g = SimpleGraph::with_vertices("random", n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k % bits.len()] {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn poset_strategy() -> impl Strategy<Value = FinitePoset> {
    prop_oneof![
        (2usize..=12, prop::collection::vec(any::<bool>(), 66))
            .prop_map(|(n, b)| random_poset(n, &b)),
        prop::collection::vec(2usize..=4, 1..=3).prop_map(|s| make_chain_product(&s).unwrap()),
        (1usize..=4).prop_map(|n| make_boolean(n).unwrap()),
    ]
}

fn singleton(p: &FinitePoset, a: usize) -> ElementSet {
    ElementSet::from_indices(p.len(), [a]).unwrap()
}

fn eccentricities_at_most(g: &SimpleGraph, bound: usize) -> bool {
    (0..g.len()).all(|s| {
        let mut dist = vec![usize::MAX; g.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v).ones() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist.iter().all(|&d| d <= bound)
    })
}

fn permuted(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    let labels = (0..g.len()).map(|i| format!("v{i}")).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    SimpleGraph::from_edges("perm", labels, &edges).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn order_and_cone_laws(p in poset_strategy()) {
        prop_assert!(p.validate_order().is_ok());
        let n = p.len();
        for a in 0..n {
            for b in 0..n {
                if !p.le(a, b) {
                    continue;
                }
                // {a} is a subset of the down-set of b, so cones are antitone
                let down_b = p.lower_cone(&singleton(&p, b)).unwrap();
                prop_assert!(p.upper_cone(&down_b).unwrap().is_subset(&p.upper_cone(&singleton(&p, a)).unwrap()));
                let ann_a = p.annihilator(&singleton(&p, a)).unwrap();
                let ann_b = p.annihilator(&singleton(&p, b)).unwrap();
                prop_assert!(ann_b.is_subset(&ann_a));
            }
        }
    }

    #[test]
    fn pseudocomplements_are_maximal(p in poset_strategy()) {
        for a in 0..p.len() {
            if let Some(s) = p.pseudocomplement(a) {
                prop_assert!(p.meets_at_zero(a, s));
                for x in 0..p.len() {
                    if p.meets_at_zero(a, x) {
                        prop_assert!(p.le(x, s));
                    }
                }
            }
        }
    }

    #[test]
    fn json_and_dual_round_trips(p in poset_strategy()) {
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let doc: PosetJson = serde_json::from_str(&text).unwrap();
        let back = FinitePoset::from_json(&doc).unwrap();
        prop_assert_eq!(back.labels(), p.labels());
        for a in 0..p.len() {
            for b in 0..p.len() {
                prop_assert_eq!(back.le(a, b), p.le(a, b));
            }
        }
        if p.one().is_some() {
            let dd = p.dual().unwrap().dual().unwrap();
            for a in 0..p.len() {
                for b in 0..p.len() {
                    prop_assert_eq!(dd.le(a, b), p.le(a, b));
                }
            }
        }
    }

    #[test]
    fn quotient_partitions_and_is_ssc(p in poset_strategy()) {
        let q = quotient(&p);
        let mut seen = vec![0usize; p.len()];
        for c in q.classes() {
            for &x in &c.members {
                seen[x] += 1;
            }
            for (i, &x) in c.members.iter().enumerate() {
                for &y in &c.members[i + 1..] {
                    if !c.is_zero() {
                        prop_assert!(!p.meets_at_zero(x, y));
                    }
                }
            }
        }
        prop_assert!(seen.iter().all(|&k| k == 1));
        let dense = p.dense_elements();
        if let Some(d) = dense.iter().next() {
            let dc = q.class_of(d);
            prop_assert!(dense.iter().all(|x| q.class_of(x) == dc));
        }
        prop_assert!(q.as_poset().unwrap().is_ssc());
    }

    #[test]
    fn zero_divisor_graph_structure(p in poset_strategy()) {
        let g = zdg(&p);
        let q = quotient(&p);
        let qg = quotient_graph(&q);
        for u in 0..g.len() {
            for v in u + 1..g.len() {
                let a = p.index_of(g.label(u)).unwrap();
                let b = p.index_of(g.label(v)).unwrap();
                let (ca, cb) = (q.class_of(a), q.class_of(b));
                let la = &q.class(ca).label;
                let lb = &q.class(cb).label;
                let class_edge = match (qg.index_of(la), qg.index_of(lb)) {
                    (Some(x), Some(y)) => qg.has_edge(x, y),
                    _ => false,
                };
                prop_assert_eq!(g.has_edge(u, v), class_edge);
            }
        }
        if g.len() >= 2 {
            prop_assert!(eccentricities_at_most(&g, 3));
        }
        let atoms: Vec<usize> = p.atoms().iter().collect();
        for &q_atom in &atoms {
            let cone: Vec<usize> = (0..g.len())
                .filter(|&v| p.le(q_atom, p.index_of(g.label(v)).unwrap()))
                .collect();
            for (i, &u) in cone.iter().enumerate() {
                for &v in &cone[i + 1..] {
                    prop_assert!(!g.has_edge(u, v));
                }
            }
        }
        if atoms.len() >= 2 {
            let idx: Vec<usize> = atoms.iter().map(|&a| g.index_of(p.label(a)).unwrap()).collect();
            prop_assert_eq!(clique_number(&g.induced_subgraph(&idx)), atoms.len());
        }
    }

    #[test]
    fn reductions_match_the_quotient(p in poset_strategy()) {
        let g = zdg(&p);
        let q = quotient(&p);
        let qg = quotient_graph(&q);
        prop_assert!(relabel_by_class(&reduce_theta(&g), &q).same_labelled(&qg));
        let red = reduce_simeq(&g.complement());
        if red.len() <= 16 && qg.len() <= 16 {
            prop_assert!(graphs_isomorphic(&red, &qg.complement()).unwrap());
        }
    }

    #[test]
    fn chordal_and_perfect_invariances(n in 0usize..=10, bits in prop::collection::vec(any::<bool>(), 45)) {
        let g = random_graph(n, &bits);
        let c = is_chordal(&g);
        let pf = is_perfect(&g);
        prop_assert_eq!(c, is_chordal(&reduce_simeq(&g)));
        prop_assert_eq!(pf, is_perfect(&reduce_simeq(&g)));
        prop_assert_eq!(pf, is_perfect(&reduce_theta(&g)));
        prop_assert_eq!(pf, is_perfect(&g.complement()));
        if c {
            prop_assert!(pf);
        }
    }

    #[test]
    fn coloring_bounds(n in 1usize..=9, bits in prop::collection::vec(any::<bool>(), 36)) {
        let g = random_graph(n, &bits);
        let chi = chromatic_number(&g).value.exact().unwrap();
        prop_assert!(chi >= clique_number(&g));
        let d = g.max_degree();
        let e = edge_chromatic_number(&g).value.exact().unwrap();
        prop_assert!(g.edge_count() == 0 || e == d || e == d + 1);
    }

    #[test]
    fn canonical_form_ignores_labelling(
        n in 1usize..=9,
        bits in prop::collection::vec(any::<bool>(), 36),
        perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let g = random_graph(n, &bits);
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        prop_assert_eq!(canonical_graph(&g).unwrap(), canonical_graph(&permuted(&g, &perm)).unwrap());
    }

    #[test]
    fn ring_graphs_match_ideal_arithmetic(n in 2u64..=400) {
        let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        let proper: Vec<u64> = divisors.iter().copied().filter(|&d| d != 1 && d != n).collect();
        let cg = comaximal_graph(&RingSpec::Zn(n)).unwrap();
        let ig = intersection_graph(&RingSpec::Zn(n)).unwrap();
        for (i, &a) in proper.iter().enumerate() {
            for &b in &proper[i + 1..] {
                let (la, lb) = (format!("({a})"), format!("({b})"));
                let lcm = a / gcd(a, b) * b;
                if let (Some(x), Some(y)) = (cg.index_of(&la), cg.index_of(&lb)) {
                    prop_assert_eq!(cg.has_edge(x, y), gcd(a, b) == 1);
                }
                if let (Some(x), Some(y)) = (ig.index_of(&la), ig.index_of(&lb)) {
                    prop_assert_eq!(ig.has_edge(x, y), !lcm.is_multiple_of(n));
                }
            }
        }
        let lattice = ideal_lattice(&RingSpec::Zn(n)).unwrap();
        prop_assert_eq!(lattice.len(), divisors.len());
    }
}

#[test]
fn chain_products_and_dual_ideal_lattices() {
    for sizes in [&[3usize, 3][..], &[2, 4], &[2, 2, 3], &[4]] {
        let p = make_chain_product(sizes).unwrap();
        let d = p.dual().unwrap();
        assert!(posets_isomorphic(&p, &d).unwrap());
        assert!(graphs_isomorphic(&zdg(&p), &zdg(&d)).unwrap());
    }
    // one atom: null graph, chordal and perfect
    let g = zdg(&make_chain(5).unwrap());
    assert!(g.is_empty() && is_chordal(&g) && is_perfect(&g));
}
