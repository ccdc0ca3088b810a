//! Validity checker for colorings, written against the definitions only and
//! sharing no code with the solvers.

use std::collections::{BTreeSet, HashMap};

use crate::analysis::coloring::{ColoringAssignment, ColoringKind};
use crate::graph::SimpleGraph;

/// Ok, or a description of the first violated condition.
pub fn check_coloring(g: &SimpleGraph, a: &ColoringAssignment) -> Result<(), String> {
    let n = g.len();
    let edges = g.edges();
    let wants_vertices = matches!(a.kind, ColoringKind::Vertex | ColoringKind::Total);
    let wants_edges = matches!(a.kind, ColoringKind::Edge | ColoringKind::Total);

    if wants_vertices && a.vertex_colors.len() != n {
        return Err(format!(
            "{} vertex colors for {} vertices",
            a.vertex_colors.len(),
            n
        ));
    }
    if !wants_vertices && !a.vertex_colors.is_empty() {
        return Err("edge coloring carries vertex colors".into());
    }

    let mut edge_color: HashMap<(usize, usize), usize> = HashMap::new();
    if wants_edges {
        for &((u, v), c) in &a.edge_colors {
            let key = (u.min(v), u.max(v));
            if u == v || u >= n || v >= n || !g.has_edge(u, v) {
                return Err(format!("colored pair ({u}, {v}) is not an edge"));
            }
            if edge_color.insert(key, c).is_some() {
                return Err(format!("edge ({u}, {v}) colored twice"));
            }
        }
        if edge_color.len() != edges.len() {
            return Err(format!(
                "{} of {} edges colored",
                edge_color.len(),
                edges.len()
            ));
        }
    } else if !a.edge_colors.is_empty() {
        return Err("vertex coloring carries edge colors".into());
    }

    if wants_vertices {
        for &(u, v) in &edges {
            if a.vertex_colors[u] == a.vertex_colors[v] {
                return Err(format!(
                    "adjacent vertices {} and {} share color {}",
                    g.label(u),
                    g.label(v),
                    a.vertex_colors[u]
                ));
            }
        }
    }
    if wants_edges {
        for v in 0..n {
            let mut seen = BTreeSet::new();
            for w in g.neighbors(v).ones() {
                let c = edge_color[&(v.min(w), v.max(w))];
                if !seen.insert(c) {
                    return Err(format!("two edges at {} share color {c}", g.label(v)));
                }
                if a.kind == ColoringKind::Total && c == a.vertex_colors[v] {
                    return Err(format!(
                        "vertex {} and an incident edge share color {c}",
                        g.label(v)
                    ));
                }
            }
        }
    }

    let used: BTreeSet<usize> = a
        .vertex_colors
        .iter()
        .copied()
        .chain(a.edge_colors.iter().map(|e| e.1))
        .collect();
    if used.len() != a.color_count {
        return Err(format!(
            "color_count {} but {} colors used",
            a.color_count,
            used.len()
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path_graph};

    #[test]
    fn accepts_valid_total_coloring() {
        let k3 = complete_graph(3);
        // vertex i gets 2i mod 3, edge {i, j} gets i + j mod 3
        let a = ColoringAssignment::new(
            ColoringKind::Total,
            vec![0, 2, 1],
            vec![((0, 1), 1), ((0, 2), 2), ((1, 2), 0)],
        );
        assert_eq!(check_coloring(&k3, &a), Ok(()));
    }

    #[test]
    fn rejects_conflicts() {
        let p = path_graph(3);
        let bad_vertex = ColoringAssignment::new(ColoringKind::Vertex, vec![0, 0, 1], vec![]);
        assert!(check_coloring(&p, &bad_vertex).is_err());
        let bad_edge =
            ColoringAssignment::new(ColoringKind::Edge, vec![], vec![((0, 1), 0), ((1, 2), 0)]);
        assert!(check_coloring(&p, &bad_edge).is_err());
        let bad_total = ColoringAssignment::new(
            ColoringKind::Total,
            vec![0, 1, 0],
            vec![((0, 1), 2), ((1, 2), 1)],
        );
        assert!(check_coloring(&p, &bad_total)
            .unwrap_err()
            .contains("incident"));
        let missing = ColoringAssignment::new(ColoringKind::Edge, vec![], vec![((0, 1), 0)]);
        assert!(check_coloring(&p, &missing).is_err());
        let not_edge =
            ColoringAssignment::new(ColoringKind::Edge, vec![], vec![((0, 1), 0), ((0, 2), 1)]);
        assert!(check_coloring(&p, &not_edge).is_err());
        let mut wrong_count = ColoringAssignment::new(ColoringKind::Vertex, vec![0, 1, 0], vec![]);
        wrong_count.color_count = 3;
        assert!(check_coloring(&p, &wrong_count).is_err());
    }
}
