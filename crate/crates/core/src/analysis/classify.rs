//! Per-instance classification records and the closed-form predictions they
//! are compared against.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::chordal::is_chordal;
use crate::analysis::coloring::{
    chromatic_number_with, clique_number, edge_chromatic_number_with, edge_class,
    independence_number, total_chromatic_number, total_type, ColoringOutcome, EdgeClass,
    ExactLimits, TotalType, Value,
};
use crate::analysis::holes::is_perfect;
use crate::graph::SimpleGraph;
use crate::poset::FinitePoset;
use crate::quotient::QuotientPoset;
use crate::zdg::zdg;

/// Which quantities to compute.
#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub chordal: bool,
    pub perfect: bool,
    pub chi: bool,
    pub chi_prime: bool,
    pub chi_double_prime: bool,
    pub limits: ExactLimits,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            chordal: true,
            perfect: true,
            chi: true,
            chi_prime: true,
            chi_double_prime: true,
            limits: ExactLimits::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub instance: String,
    pub key: String,
    pub atoms: Option<usize>,
    pub chordal: Option<bool>,
    pub perfect: Option<bool>,
    pub clique: usize,
    pub chi: Option<Value>,
    pub chi_prime: Option<Value>,
    pub chi_double_prime: Option<Value>,
    pub delta: usize,
    pub edge_class: Option<EdgeClass>,
    pub total_type: Option<TotalType>,
    /// Set when the total-coloring search was refused at the size cap.
    pub refused: bool,
    pub agreement: BTreeMap<String, bool>,
}

pub const CSV_HEADER: &str =
    "instance,key,atoms,chordal,perfect,clique,chi,chiPrime,chiDoublePrime,delta,class,type";

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl ClassificationReport {
    pub fn csv_row(&self) -> String {
        let class = match self.edge_class {
            Some(EdgeClass::One) => "one",
            Some(EdgeClass::Two) => "two",
            None => "",
        };
        let ty = match self.total_type {
            Some(TotalType::I) => "I",
            Some(TotalType::II) => "II",
            None => "",
        };
        [
            csv_field(&self.instance),
            csv_field(&self.key),
            opt(self.atoms),
            opt(self.chordal),
            opt(self.perfect),
            self.clique.to_string(),
            opt(self.chi),
            opt(self.chi_prime),
            opt(self.chi_double_prime),
            self.delta.to_string(),
            class.to_string(),
            ty.to_string(),
        ]
        .join(",")
    }

    /// True iff every recorded agreement flag holds.
    pub fn agrees(&self) -> bool {
        self.agreement.values().all(|&b| b)
    }
}

/// Coloring outcomes behind a report, for re-checking the assignments.
#[derive(Clone, Debug, Default)]
pub struct ColoringOutcomes {
    pub chi: Option<ColoringOutcome>,
    pub chi_prime: Option<ColoringOutcome>,
    pub chi_double_prime: Option<ColoringOutcome>,
}

pub fn classify_graph(
    instance: &str,
    key: &str,
    g: &SimpleGraph,
    atoms: Option<usize>,
    opts: &AnalysisOptions,
) -> ClassificationReport {
    classify_graph_detailed(instance, key, g, atoms, opts).0
}

pub fn classify_graph_detailed(
    instance: &str,
    key: &str,
    g: &SimpleGraph,
    atoms: Option<usize>,
    opts: &AnalysisOptions,
) -> (ClassificationReport, ColoringOutcomes) {
    let delta = g.max_degree();
    let outcomes = ColoringOutcomes {
        chi: opts.chi.then(|| chromatic_number_with(g, &opts.limits)),
        chi_prime: opts
            .chi_prime
            .then(|| edge_chromatic_number_with(g, &opts.limits)),
        chi_double_prime: opts
            .chi_double_prime
            .then(|| total_chromatic_number(g, &opts.limits)),
    };
    let chi_prime = outcomes.chi_prime.as_ref().map(|o| o.value);
    let chi_double_prime = outcomes.chi_double_prime.as_ref().map(|o| o.value);
    let nonempty = g.edge_count() > 0;
    let report = ClassificationReport {
        instance: instance.to_string(),
        key: key.to_string(),
        atoms,
        chordal: opts.chordal.then(|| is_chordal(g)),
        perfect: opts.perfect.then(|| is_perfect(g)),
        clique: clique_number(g),
        chi: outcomes.chi.as_ref().map(|o| o.value),
        chi_prime,
        chi_double_prime,
        delta,
        edge_class: chi_prime
            .and_then(Value::exact)
            .filter(|_| nonempty)
            .and_then(|x| edge_class(x, delta)),
        total_type: chi_double_prime
            .and_then(Value::exact)
            .filter(|_| !g.is_empty())
            .and_then(|x| total_type(x, delta)),
        refused: outcomes
            .chi_double_prime
            .as_ref()
            .is_some_and(|t| t.refused),
        agreement: BTreeMap::new(),
    };
    (report, outcomes)
}

/// Closed-form chordality and perfectness predictions, available when `[P]`
/// is Boolean.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructurePrediction {
    pub zdg_chordal: bool,
    pub complement_chordal: bool,
    pub zdg_perfect: bool,
}

pub fn predict_structure(q: &QuotientPoset) -> Option<StructurePrediction> {
    if !q.is_boolean() {
        return None;
    }
    let n = q.atom_count();
    let atom_sizes: Vec<usize> = (0..n).map(|i| q.class(q.atom_class(i)).size()).collect();
    let zdg_chordal = match n {
        0 | 1 => true,
        2 => atom_sizes.contains(&1),
        3 => atom_sizes.iter().all(|&s| s == 1),
        _ => false,
    };
    Some(StructurePrediction {
        zdg_chordal,
        complement_chordal: n <= 3,
        zdg_perfect: n <= 4,
    })
}

/// Total type of `G(C_{a_1} x ... x C_{a_n})`: type II exactly for two
/// factors of equal size.
pub fn chain_product_type(sizes: &[usize]) -> TotalType {
    if sizes.len() == 2 && sizes[0] == sizes[1] {
        TotalType::II
    } else {
        TotalType::I
    }
}

/// `chi''(K_n)`.
pub fn complete_total_chromatic(n: usize) -> usize {
    if n % 2 == 1 {
        n
    } else {
        n + 1
    }
}

/// `chi'(K_n)` for `n >= 2`.
pub fn complete_edge_chromatic(n: usize) -> usize {
    if n % 2 == 1 {
        n
    } else {
        n - 1
    }
}

/// `chi''(K_{m,n}) = max(m, n) + 1 + [m = n]`.
pub fn bipartite_total_chromatic(m: usize, n: usize) -> usize {
    m.max(n) + 1 + usize::from(m == n)
}

/// Some independent set has at least `N - Delta - 1` vertices (exact `alpha`).
pub fn independent_set_bound_check(g: &SimpleGraph) -> bool {
    let n = g.len();
    let need = n.saturating_sub(g.max_degree() + 1);
    independence_number(g) >= need
}

/// The same bound witnessed by an atom cone `q^u` restricted to the vertices
/// of `G(P)`, which is always independent.
pub fn atom_cone_bound_check(p: &FinitePoset) -> bool {
    let g = zdg(p);
    let need = g.len().saturating_sub(g.max_degree() + 1);
    largest_atom_cone(p) >= need
}

/// Largest `|q^u cap V(G(P))|` over atoms `q`.
pub fn largest_atom_cone(p: &FinitePoset) -> usize {
    let z = p.zero_divisors();
    p.atoms()
        .iter()
        .map(|q| {
            (0..p.len())
                .filter(|&x| x != p.zero() && z.contains(x) && p.le(q, x))
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// `Delta >= 3N/4`.
pub fn density_bound_check(g: &SimpleGraph) -> bool {
    4 * g.max_degree() >= 3 * g.len()
}
