//! Explicit total colorings of `G^c(P)` for 0-distributive posets with two
//! or three atoms.
//!
//! Notation: `L_i` is the atom class `[q_i]`, `M_i` the pseudocomplement
//! class `[q_i]*`, `l_i` and `m_i` their sizes. In `G^c(P)` each class is a
//! clique, `M = M_1 u M_2 u M_3` is a clique, `L_i` is complete to `M_j` for
//! `j != i`, and there are no other edges.

use std::fmt;

use serde::Serialize;

use crate::analysis::check::check_coloring;
use crate::analysis::coloring::{
    total_chromatic_number, total_coloring_with, within_total_cap, ColoringAssignment,
    ColoringKind, ExactLimits, Value,
};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poset::FinitePoset;
use crate::quotient::{quotient, QuotientPoset};
use crate::zdg::zdg;

/// Hypothesis of the three-atom construction that an instance failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Precondition {
    AtomCount {
        expected: usize,
        found: usize,
    },
    NotZeroDistributive,
    /// `l_i >= |V| / 4` fails for the atom numbered `atom` (1-based).
    QuarterBound {
        atom: usize,
        size: usize,
        vertices: usize,
    },
    /// After sorting, `l_2 >= m_1 + m_3` fails.
    MiddleClass {
        l2: usize,
        m1_plus_m3: usize,
    },
    /// After sorting, `l_1 >= m_2` fails.
    SmallestClass {
        l1: usize,
        m2: usize,
    },
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::AtomCount { expected, found } => {
                write!(f, "atom-count: expected {expected}, found {found}")
            }
            Precondition::NotZeroDistributive => {
                write!(f, "zero-distributive: poset is not 0-distributive")
            }
            Precondition::QuarterBound {
                atom,
                size,
                vertices,
            } => {
                write!(f, "quarter-bound: |[q{atom}]| = {size} < {vertices}/4")
            }
            Precondition::MiddleClass { l2, m1_plus_m3 } => {
                write!(f, "middle-class: l2 = {l2} < m1 + m3 = {m1_plus_m3}")
            }
            Precondition::SmallestClass { l1, m2 } => {
                write!(f, "smallest-class: l1 = {l1} < m2 = {m2}")
            }
        }
    }
}

impl From<Precondition> for Error {
    fn from(p: Precondition) -> Self {
        Error::Precondition(p.to_string())
    }
}

/// Behzad total coloring of `K_n` on vertices `0..n`: vertex colors and a
/// function giving edge colors. Uses `n` colors for odd `n`, `n + 1` for even.
pub fn complete_total_coloring(n: usize) -> (Vec<usize>, impl Fn(usize, usize) -> usize) {
    let modulus = if n % 2 == 1 { n } else { n + 1 };
    let vertices = (0..n).map(|i| (2 * i) % modulus).collect();
    (vertices, move |i: usize, j: usize| (i + j) % modulus)
}

/// Class structure of a 0-distributive poset with `n` atoms: members of each
/// atom class and of each pseudocomplement class, as `G^c` vertex indices.
struct ClassLayout {
    graph: SimpleGraph,
    l: Vec<Vec<usize>>,
    m: Vec<Vec<usize>>,
}

fn layout(p: &FinitePoset, q: &QuotientPoset, atoms: usize) -> Result<ClassLayout> {
    if q.atom_count() != atoms {
        return Err(Precondition::AtomCount {
            expected: atoms,
            found: q.atom_count(),
        }
        .into());
    }
    if !p.is_zero_distributive() {
        return Err(Precondition::NotZeroDistributive.into());
    }
    let graph = zdg(p).complement().with_name(format!("G^c({})", p.name()));
    let index = graph.label_index();
    let to_vertices = |class: usize| -> Vec<usize> {
        q.class(class)
            .members
            .iter()
            .map(|&x| index[p.label(x)])
            .collect()
    };
    let mut l = Vec::new();
    let mut m = Vec::new();
    for i in 0..atoms {
        l.push(to_vertices(q.atom_class(i)));
        m.push(to_vertices(q.class_pseudocomplement(q.atom_class(i))?));
    }
    Ok(ClassLayout { graph, l, m })
}

/// Two atoms: `G^c(P) = K_{l_1} + K_{l_2}`, each component colored with the
/// Behzad pattern and sharing the palette.
pub fn complement_total_coloring_two_atoms(
    p: &FinitePoset,
) -> Result<(SimpleGraph, ColoringAssignment)> {
    let q = quotient(p);
    let lay = layout(p, &q, 2)?;
    let g = lay.graph;
    let mut vertex = vec![usize::MAX; g.len()];
    let mut edge_color = std::collections::HashMap::new();
    for class in &lay.l {
        let (vc, ec) = complete_total_coloring(class.len());
        for (i, &v) in class.iter().enumerate() {
            vertex[v] = vc[i];
            for (j, &w) in class.iter().enumerate().skip(i + 1) {
                edge_color.insert((v.min(w), v.max(w)), ec(i, j));
            }
        }
    }
    let edges = g
        .edges()
        .into_iter()
        .map(|e| {
            (
                e,
                *edge_color
                    .get(&e)
                    .expect("every edge lies inside one class"),
            )
        })
        .collect();
    let a = ColoringAssignment::new(ColoringKind::Total, vertex, edges);
    Ok((g, a))
}

/// Checks the three-atom hypotheses and returns the atom order sorting the
/// class sizes ascending.
fn three_atom_order(lay: &ClassLayout) -> std::result::Result<[usize; 3], Precondition> {
    let vertices = lay.graph.len();
    for (i, class) in lay.l.iter().enumerate() {
        if 4 * class.len() < vertices {
            return Err(Precondition::QuarterBound {
                atom: i + 1,
                size: class.len(),
                vertices,
            });
        }
    }
    let mut order = [0, 1, 2];
    order.sort_by_key(|&i| (lay.l[i].len(), i));
    let [a, b, c] = order;
    let (l1, l2) = (lay.l[a].len(), lay.l[b].len());
    let (m1, m2, m3) = (lay.m[a].len(), lay.m[b].len(), lay.m[c].len());
    if l2 < m1 + m3 {
        return Err(Precondition::MiddleClass {
            l2,
            m1_plus_m3: m1 + m3,
        });
    }
    if l1 < m2 {
        return Err(Precondition::SmallestClass { l1, m2 });
    }
    Ok(order)
}

/// Three atoms: the five-step construction with at most `Delta + 2` colors.
///
/// After relabelling so that `l_1 <= l_2 <= l_3`:
/// 1. total-color the complete graph on `M u L_3` (edges `M_3`-`L_3` are
///    colored there although they are not edges of `G^c`);
/// 2. give the `k`-th member of `L_2` and of `L_1` the colors of the `k`-th
///    member of `L_3`, internal edges included;
/// 3. edge `M_3j`-`L_1k` takes the color of the phantom edge `M_3j`-`L_3k`;
/// 4. edges between `L_2` and `M_1 u M_3` get `l_2` fresh colors round-robin;
/// 5. edges between `L_1` and `M_2` reuse the first `l_1` fresh colors.
pub fn complement_total_coloring_three_atoms(
    p: &FinitePoset,
) -> Result<(SimpleGraph, ColoringAssignment)> {
    let q = quotient(p);
    let lay = layout(p, &q, 3)?;
    let [a, b, c] = three_atom_order(&lay)?;
    let (l1, l2, l3) = (&lay.l[a], &lay.l[b], &lay.l[c]);
    let (m1, m2, m3) = (&lay.m[a], &lay.m[b], &lay.m[c]);
    let g = &lay.graph;

    // step 1: K_r on M1, M2, M3, L3 in this order
    let kr: Vec<usize> = m1.iter().chain(m2).chain(m3).chain(l3).copied().collect();
    let mut pos = vec![usize::MAX; g.len()];
    for (i, &v) in kr.iter().enumerate() {
        pos[v] = i;
    }
    let (kr_vertex, kr_edge) = complete_total_coloring(kr.len());
    let base = if kr.len() % 2 == 1 {
        kr.len()
    } else {
        kr.len() + 1
    };

    let mut vertex = vec![usize::MAX; g.len()];
    let mut edge_color = std::collections::HashMap::new();
    let mut put = |u: usize, v: usize, c: usize| {
        edge_color.insert((u.min(v), u.max(v)), c);
    };
    for (i, &v) in kr.iter().enumerate() {
        vertex[v] = kr_vertex[i];
        for (j, &w) in kr.iter().enumerate().skip(i + 1) {
            if g.has_edge(v, w) {
                put(v, w, kr_edge(i, j));
            }
        }
    }
    // step 2
    for copy in [l2, l1] {
        for (k, &v) in copy.iter().enumerate() {
            vertex[v] = vertex[l3[k]];
            for (k2, &w) in copy.iter().enumerate().skip(k + 1) {
                put(v, w, kr_edge(pos[l3[k]], pos[l3[k2]]));
            }
        }
    }
    // step 3
    for &x in m3 {
        for (k, &v) in l1.iter().enumerate() {
            put(x, v, kr_edge(pos[x], pos[l3[k]]));
        }
    }
    // step 4
    let fresh = l2.len();
    for (s, &v) in l2.iter().enumerate() {
        for (t, &x) in m1.iter().chain(m3).enumerate() {
            put(v, x, base + (s + t) % fresh);
        }
    }
    // step 5
    for (s, &v) in l1.iter().enumerate() {
        for (t, &x) in m2.iter().enumerate() {
            put(v, x, base + (s + t) % l1.len());
        }
    }

    let edges = g
        .edges()
        .into_iter()
        .map(|e| {
            (
                e,
                *edge_color.get(&e).expect("construction colors every edge"),
            )
        })
        .collect();
    let a = ColoringAssignment::new(ColoringKind::Total, vertex, edges);
    Ok((lay.graph.clone(), a))
}

/// `Delta(G^c(P)) = |V| - min_i |[q_i]| - 1` for 0-distributive `P`, checked
/// against the degree scan.
pub fn max_degree_complement_formula(p: &FinitePoset) -> Result<usize> {
    if !p.is_zero_distributive() {
        return Err(Precondition::NotZeroDistributive.into());
    }
    let q = quotient(p);
    let gc = zdg(p).complement();
    if gc.is_empty() {
        return Ok(0);
    }
    let min_class = (0..q.atom_count())
        .map(|i| q.class(q.atom_class(i)).size())
        .min()
        .unwrap_or(0);
    let formula = gc.len() - min_class - 1;
    let direct = gc.max_degree();
    if formula != direct {
        return Err(Error::IdentityViolated(format!(
            "degree formula gives {formula}, degree scan gives {direct}"
        )));
    }
    Ok(formula)
}

/// How a complement coloring was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    TwoAtomComponents,
    ThreeAtomConstruction,
    /// Exact search; the color count is `chi''`.
    ExactSearch,
    /// Budgeted search for a coloring with `Delta + 2` colors.
    BoundedSearch,
    /// Greedy fallback; not guaranteed to meet `Delta + 2`.
    Greedy,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplementColoring {
    pub method: Method,
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub assignment: ColoringAssignment,
    pub delta: usize,
    pub bound: usize,
    pub valid: bool,
    /// Why the explicit construction was not used, if it was not.
    pub construction_refused: Option<String>,
    /// Exact `chi''` when the exact search ran.
    pub exact: Option<usize>,
}

/// Total coloring of `G^c(P)`: the explicit construction when its hypotheses
/// hold, otherwise exact search within the cap, otherwise a budgeted search
/// for `Delta + 2` colors, otherwise greedy.
pub fn complement_total_coloring(
    p: &FinitePoset,
    limits: &ExactLimits,
) -> Result<ComplementColoring> {
    let atoms = p.atoms().len();
    let attempt = match atoms {
        2 => complement_total_coloring_two_atoms(p).map(|r| (Method::TwoAtomComponents, r)),
        3 => complement_total_coloring_three_atoms(p).map(|r| (Method::ThreeAtomConstruction, r)),
        found => Err(Precondition::AtomCount { expected: 3, found }.into()),
    };
    let (method, graph, assignment, refused, exact) = match attempt {
        Ok((method, (g, a))) => (method, g, a, None, None),
        Err(Error::Precondition(why)) => {
            let g = zdg(p).complement().with_name(format!("G^c({})", p.name()));
            let delta = g.max_degree();
            if within_total_cap(&g, limits) {
                let out = total_chromatic_number(&g, limits);
                let exact = out.value.exact();
                let method = if exact.is_some() {
                    Method::ExactSearch
                } else {
                    Method::BoundedSearch
                };
                (method, g, out.assignment, Some(why), exact)
            } else if let Some(a) = total_coloring_with(&g, delta + 2, limits.node_budget) {
                (Method::BoundedSearch, g, a, Some(why), None)
            } else {
                let out = total_chromatic_number(&g, limits);
                (Method::Greedy, g, out.assignment, Some(why), None)
            }
        }
        Err(e) => return Err(e),
    };
    let delta = graph.max_degree();
    let valid = check_coloring(&graph, &assignment).is_ok();
    Ok(ComplementColoring {
        method,
        delta,
        bound: delta + 2,
        valid,
        construction_refused: refused,
        exact,
        graph,
        assignment,
    })
}

/// Exact `chi''` of `G^c(P)`: by search within the cap, or above it when a
/// heuristic coloring reaches `Delta + 1`.
pub fn complement_exact_total(p: &FinitePoset, limits: &ExactLimits) -> Option<usize> {
    let g = zdg(p).complement();
    match total_chromatic_number(&g, limits).value {
        Value::Exact(x) => Some(x),
        Value::Range { .. } => None,
    }
}
