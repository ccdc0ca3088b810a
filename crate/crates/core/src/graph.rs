//! Finite simple graphs with labelled vertices and bitset adjacency.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    name: String,
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

/// On-disk graph format. `vertices` is accepted as an alias of `elements`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default)]
    pub name: String,
    #[serde(alias = "vertices")]
    pub elements: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    /// Edgeless graph on the given labels.
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Self {
            name: name.into(),
            labels,
            adj: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    pub fn from_edges(
        name: impl Into<String>,
        labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let mut g = Self::new(name, labels)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on `0..n` labelled by index.
    pub fn with_vertices(name: impl Into<String>, n: usize) -> Self {
        Self::new(name, (0..n).map(|i| i.to_string()).collect()).expect("distinct labels")
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, len: n });
            }
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn from_json(doc: &GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edges(doc.name.clone(), doc.elements.clone(), &edges)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(s)?;
        Self::from_json(&doc)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            name: self.name.clone(),
            elements: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.len();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        SimpleGraph {
            name: format!("{}^c", self.name),
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Subgraph induced on `vertices`, in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = SimpleGraph {
            name: self.name.clone(),
            labels,
            adj: vec![FixedBitSet::with_capacity(vertices.len()); vertices.len()],
        };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                }
            }
        }
        g
    }

    /// Vertices of `self` followed by vertices of `other`; labels must not clash.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut g = SimpleGraph::new(format!("{}+{}", self.name, other.name), labels)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(n + u, n + v)?;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.len();
        let mut g = self.disjoint_union(other)?;
        for u in 0..n {
            for v in 0..other.len() {
                g.add_edge(u, n + v)?;
            }
        }
        Ok(g.with_name(format!("{}v{}", self.name, other.name)))
    }

    /// Label-preserving equality, ignoring vertex order and graph name.
    pub fn same_labelled(&self, other: &SimpleGraph) -> bool {
        let a: BTreeSet<&str> = self.labels.iter().map(String::as_str).collect();
        let b: BTreeSet<&str> = other.labels.iter().map(String::as_str).collect();
        a == b && self.labelled_edges() == other.labelled_edges()
    }

    /// Edges as sorted label pairs.
    pub fn labelled_edges(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Line graph: one vertex per edge, in `edges()` order.
    pub fn line_graph(&self) -> SimpleGraph {
        let edges = self.edges();
        let labels = edges
            .iter()
            .map(|&(u, v)| format!("{}--{}", self.labels[u], self.labels[v]))
            .collect();
        let mut g = SimpleGraph {
            name: format!("L({})", self.name),
            labels,
            adj: vec![FixedBitSet::with_capacity(edges.len()); edges.len()],
        };
        let incident = self.incidence(&edges);
        for list in incident {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    g.adj[a].insert(b);
                    g.adj[b].insert(a);
                }
            }
        }
        g
    }

    /// Total graph: the vertices, then one vertex per edge in `edges()` order.
    /// Adjacent elements are adjacent vertices, incident vertex/edge pairs and
    /// edges sharing an endpoint.
    pub fn total_graph(&self) -> SimpleGraph {
        let n = self.len();
        let edges = self.edges();
        let m = edges.len();
        let mut labels = self.labels.clone();
        labels.extend(
            edges
                .iter()
                .map(|&(u, v)| format!("{}--{}", self.labels[u], self.labels[v])),
        );
        let mut adj = vec![FixedBitSet::with_capacity(n + m); n + m];
        for v in 0..n {
            for w in self.adj[v].ones() {
                adj[v].insert(w);
            }
        }
        let incident = self.incidence(&edges);
        for (v, list) in incident.iter().enumerate() {
            for (i, &a) in list.iter().enumerate() {
                adj[v].insert(n + a);
                adj[n + a].insert(v);
                for &b in &list[i + 1..] {
                    adj[n + a].insert(n + b);
                    adj[n + b].insert(n + a);
                }
            }
        }
        SimpleGraph {
            name: format!("T({})", self.name),
            labels,
            adj,
        }
    }

    fn incidence(&self, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut incident = vec![Vec::new(); self.len()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        incident
    }

    /// DOT text: node statements for every vertex, then the edges sorted by
    /// label pair.
    pub fn to_dot(&self) -> String {
        if self.is_empty() {
            return "graph G { }\n".into();
        }
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  \"{}\";", escape(l));
        }
        for (a, b) in self.labelled_edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", escape(&a), escape(&b));
        }
        out.push_str("}\n");
        out
    }

    /// Position of every label.
    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `K_n` on `v1..vn`.
pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(format!("K{n}"), labels("v", n)).expect("distinct labels");
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("valid edge");
        }
    }
    g
}

/// `I_n` on `v1..vn`.
pub fn empty_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(format!("I{n}"), labels("v", n)).expect("distinct labels")
}

/// Cycle `v1 - v2 - ... - vn - v1`, `n >= 3`.
pub fn cycle_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(format!("C{n}"), labels("v", n)).expect("distinct labels");
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).expect("valid edge");
    }
    g
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(format!("P{n}"), labels("v", n)).expect("distinct labels");
    for i in 1..n {
        g.add_edge(i - 1, i).expect("valid edge");
    }
    g
}

/// `K_{m,n}` with sides `a1..am` and `b1..bn`.
pub fn complete_bipartite(m: usize, n: usize) -> SimpleGraph {
    let mut l = labels("a", m);
    l.extend(labels("b", n));
    let mut g = SimpleGraph::new(format!("K{m},{n}"), l).expect("distinct labels");
    for u in 0..m {
        for v in 0..n {
            g.add_edge(u, m + v).expect("valid edge");
        }
    }
    g
}
