//! Batch cross-checks of the closed-form results against the generic
//! recognisers and exact solvers over deterministic instance families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    annihilating_and_coannihilating, annihilating_graph, coannihilating_graph, comaximal_graph,
    comaximal_graph_star, factorize, ideal_lattice, intersection_graph, jacobson_ideal_count,
    predicted_family, RingSpec,
};
use crate::analysis::check::check_coloring;
use crate::analysis::chordal::{is_chordal, is_chordless_cycle};
use crate::analysis::classify::{
    bipartite_total_chromatic, chain_product_type, classify_graph_detailed,
    complete_edge_chromatic, complete_total_chromatic, predict_structure, AnalysisOptions,
    ClassificationReport, ColoringOutcomes,
};
use crate::analysis::coloring::{EdgeClass, ExactLimits, TotalType, Value};
use crate::analysis::holes::is_perfect;
use crate::canon::{graphs_isomorphic, MAX_CANON_VERTICES};
use crate::constructive::{complement_total_coloring, Method};
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, complete_graph, GraphJson, SimpleGraph};
use crate::poset::{
    make_boolean, make_chain_product, make_three_atom_poset, mixed_radix, ClassShape, FinitePoset,
    PosetJson,
};
use crate::quotient::{quotient, QuotientPoset};
use crate::zdg::{reduce_simeq, reduce_theta, zdg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    ChordalTheorem,
    PerfectTheorem,
    Coloring,
    Tcc,
    Behzad,
    ComplementTcc,
    Reduction,
    QuotientStructure,
    ArtinianIdentity,
    IdealArithmetic,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::ChordalTheorem,
        Check::PerfectTheorem,
        Check::Coloring,
        Check::Tcc,
        Check::Behzad,
        Check::ComplementTcc,
        Check::Reduction,
        Check::QuotientStructure,
        Check::ArtinianIdentity,
        Check::IdealArithmetic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ChordalTheorem => "chordal-theorem",
            Check::PerfectTheorem => "perfect-theorem",
            Check::Coloring => "coloring",
            Check::Tcc => "tcc",
            Check::Behzad => "behzad",
            Check::ComplementTcc => "complement-tcc",
            Check::Reduction => "reduction",
            Check::QuotientStructure => "quotient-structure",
            Check::ArtinianIdentity => "artinian-identity",
            Check::IdealArithmetic => "ideal-arithmetic",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

/// An entry of a corpus file.
#[derive(Clone, Debug)]
pub enum CorpusItem {
    Poset(FinitePoset),
    Graph(SimpleGraph),
}

/// Reads a JSON array whose entries are posets (objects with `covers`) or
/// graphs (objects with `edges`).
pub fn load_corpus(text: &str) -> Result<Vec<CorpusItem>> {
    let docs: Vec<serde_json::Value> = serde_json::from_str(text)?;
    docs.into_iter()
        .enumerate()
        .map(|(i, doc)| {
            if doc.get("covers").is_some() {
                let p: PosetJson = serde_json::from_value(doc)?;
                Ok(CorpusItem::Poset(FinitePoset::from_json(&p)?))
            } else if doc.get("edges").is_some() {
                let g: GraphJson = serde_json::from_value(doc)?;
                Ok(CorpusItem::Graph(SimpleGraph::from_json(&g)?))
            } else {
                Err(Error::InvalidArgument(format!(
                    "corpus entry {i} has neither covers nor edges"
                )))
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub enum Family {
    ChainProducts,
    Boolean,
    ThreeAtom,
    Zn,
    Pir,
    CorpusFile(Vec<CorpusItem>),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::ChainProducts => "chain-products",
            Family::Boolean => "boolean",
            Family::ThreeAtom => "three-atom",
            Family::Zn => "zn",
            Family::Pir => "pir",
            Family::CorpusFile(_) => "corpus-file",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeBounds {
    /// Factors in a chain product or PIR.
    pub max_factors: usize,
    /// Graph vertices; `None` means the family default.
    pub max_graph_vertices: Option<usize>,
    /// Atoms of a Boolean lattice.
    pub max_atoms: usize,
    /// Largest `n` for `Z_n`.
    pub max_n: u64,
    /// Largest nilpotency index for PIR factors.
    pub max_index: u32,
}

impl Default for SizeBounds {
    fn default() -> Self {
        Self {
            max_factors: 5,
            max_graph_vertices: None,
            max_atoms: 5,
            max_n: 200,
            max_index: 3,
        }
    }
}

impl SizeBounds {
    fn vertex_cap(&self, family: &Family) -> usize {
        self.max_graph_vertices.unwrap_or(match family {
            Family::ChainProducts => 12,
            Family::Zn | Family::Pir => 40,
            _ => usize::MAX,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub theorem: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} expected {} got {}",
            self.instance, self.theorem, self.expected, self.actual
        )
    }
}

/// A check that could not be decided for an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub instance: String,
    pub theorem: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRun {
    pub family: String,
    pub bounds: SizeBounds,
    pub checks: Vec<Check>,
    pub results: Vec<ClassificationReport>,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skipped>,
}

impl VerificationRun {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Some check could not be decided because the exact search was refused
    /// or ran out of budget.
    pub fn refused(&self) -> bool {
        self.skipped
            .iter()
            .any(|s| s.reason.starts_with("exact search"))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub family: Family,
    pub checks: Vec<Check>,
    pub bounds: SizeBounds,
    pub limits: ExactLimits,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug)]
enum Instance {
    Poset {
        poset: FinitePoset,
        chain_sizes: Option<Vec<usize>>,
        /// The explicit three-atom construction is expected to apply.
        construction: bool,
    },
    Ring(RingSpec),
    Graph(SimpleGraph),
    Complete(usize),
    Bipartite(usize, usize),
}

/// `|V(G(C_{a_1} x ... x C_{a_k}))| = prod a_i - prod (a_i - 1) - 1`.
pub fn chain_product_vertices(sizes: &[usize]) -> usize {
    let all: usize = sizes.iter().product();
    let dense: usize = sizes.iter().map(|a| a - 1).product();
    all - dense - 1
}

/// Nondecreasing factor tuples (each factor at least 2) in lexicographic
/// order, with at most `max_factors` factors and at most `max_vertices`
/// graph vertices. A single chain has an empty graph, so its length is
/// bounded by `max_vertices` as well.
pub fn chain_product_tuples(max_factors: usize, max_vertices: usize) -> Vec<Vec<usize>> {
    fn extend(
        t: &mut Vec<usize>,
        max_factors: usize,
        max_vertices: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let lo = t.last().copied().unwrap_or(2);
        let mut a = lo;
        loop {
            t.push(a);
            let v = chain_product_vertices(t);
            let fits = v <= max_vertices && (t.len() > 1 || a <= max_vertices.max(2));
            if fits {
                out.push(t.clone());
                if t.len() < max_factors {
                    extend(t, max_factors, max_vertices, out);
                }
            }
            t.pop();
            if !fits {
                break;
            }
            a += 1;
        }
    }
    let mut out = Vec::new();
    if max_factors > 0 {
        extend(&mut Vec::new(), max_factors, max_vertices, &mut out);
    }
    out.sort();
    out
}

/// Three-atom posets satisfying `l_i >= |V| / 4`, atom classes sorted, with
/// both atom-class shapes.
pub fn three_atom_hypothesis_instances() -> Vec<FinitePoset> {
    let mut out = Vec::new();
    for l1 in 2..=6 {
        for l2 in l1..=6 {
            for l3 in l2..=6 {
                for mask in 0..8usize {
                    let m = [1 + (mask & 1), 1 + (mask >> 1 & 1), 1 + (mask >> 2 & 1)];
                    let v = l1 + l2 + l3 + m.iter().sum::<usize>();
                    if 4 * l1 < v {
                        continue;
                    }
                    for shape in [ClassShape::Chain, ClassShape::Fan] {
                        let name_shape = if shape == ClassShape::Fan { "-fan" } else { "" };
                        let p = make_three_atom_poset([l1, l2, l3], m, shape)
                            .expect("valid class sizes");
                        let name = format!("{}{}", p.name(), name_shape);
                        out.push(p.with_name(name));
                    }
                }
            }
        }
    }
    out
}

/// The three-atom poset with every class of size 4. It lies outside the
/// hypotheses of the explicit construction: `m_i = 4`, and `4 * l_1 = 16 < 24 = |V|`.
pub fn uniform_three_atom_poset() -> FinitePoset {
    make_three_atom_poset([4, 4, 4], [4, 4, 4], ClassShape::Chain)
        .expect("valid class sizes")
        .with_name("three-atom-uniform-4")
}

fn pir_tuples(max_factors: usize, max_index: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = (1..=max_index).map(|k| vec![k]).collect();
    while let Some(t) = stack.pop() {
        if t.len() < max_factors {
            for k in *t.last().unwrap()..=max_index {
                let mut t2 = t.clone();
                t2.push(k);
                stack.push(t2);
            }
        }
        out.push(t);
    }
    out.sort();
    out
}

fn instances(cfg: &VerifyConfig) -> Result<Vec<Instance>> {
    let b = &cfg.bounds;
    let cap = b.vertex_cap(&cfg.family);
    let chain = |sizes: Vec<usize>| -> Result<Instance> {
        Ok(Instance::Poset {
            poset: make_chain_product(&sizes)?,
            chain_sizes: Some(sizes),
            construction: false,
        })
    };
    let mut out = match &cfg.family {
        Family::ChainProducts => chain_product_tuples(b.max_factors, cap)
            .into_iter()
            .map(chain)
            .collect::<Result<Vec<_>>>()?,
        Family::Boolean => (1..=b.max_atoms)
            .map(|n| {
                Ok(Instance::Poset {
                    poset: make_boolean(n)?,
                    chain_sizes: Some(vec![2; n]),
                    construction: false,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        Family::ThreeAtom => {
            let mut v: Vec<Instance> = three_atom_hypothesis_instances()
                .into_iter()
                .map(|poset| Instance::Poset {
                    poset,
                    chain_sizes: None,
                    construction: true,
                })
                .collect();
            v.push(Instance::Poset {
                poset: uniform_three_atom_poset(),
                chain_sizes: None,
                construction: false,
            });
            v
        }
        Family::Zn => (2..=b.max_n)
            .map(|n| Instance::Ring(RingSpec::Zn(n)))
            .collect(),
        Family::Pir => pir_tuples(b.max_factors, b.max_index)
            .into_iter()
            .map(|k| Instance::Ring(RingSpec::ArtinianPir(k)))
            .collect(),
        Family::CorpusFile(items) => items
            .iter()
            .map(|item| match item {
                CorpusItem::Poset(p) => Instance::Poset {
                    poset: p.clone(),
                    chain_sizes: None,
                    construction: false,
                },
                CorpusItem::Graph(g) => Instance::Graph(g.clone()),
            })
            .collect(),
    };
    if cfg.checks.contains(&Check::Behzad) {
        out.extend((1..=7).map(Instance::Complete));
        for m in 1..=4 {
            out.extend((m..=4).map(|n| Instance::Bipartite(m, n)));
        }
    }
    Ok(out)
}

struct Ctx<'a> {
    instance: String,
    checks: &'a [Check],
    limits: ExactLimits,
    cap: usize,
    agreement: BTreeMap<String, bool>,
    failures: Vec<Failure>,
    skipped: Vec<Skipped>,
}

impl Ctx<'_> {
    fn wants(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, theorem: &str, expected: T, actual: T) {
        let ok = expected == actual;
        *self.agreement.entry(theorem.to_string()).or_insert(true) &= ok;
        if !ok {
            self.failures.push(Failure {
                instance: self.instance.clone(),
                theorem: theorem.to_string(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    fn skip(&mut self, theorem: &str, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            instance: self.instance.clone(),
            theorem: theorem.to_string(),
            reason: reason.into(),
        });
    }

    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            chordal: self.wants(Check::ChordalTheorem) || self.wants(Check::Reduction),
            perfect: self.wants(Check::PerfectTheorem) || self.wants(Check::Reduction),
            chi: self.wants(Check::Coloring),
            chi_prime: self.wants(Check::Coloring) || self.wants(Check::Behzad),
            chi_double_prime: self.wants(Check::Tcc) || self.wants(Check::Behzad),
            limits: self.limits,
        }
    }

    /// Assignments pass the checker; the generic invariants on the numbers hold.
    fn coloring_invariants(
        &mut self,
        g: &SimpleGraph,
        r: &ClassificationReport,
        o: &ColoringOutcomes,
    ) {
        for out in [&o.chi, &o.chi_prime, &o.chi_double_prime]
            .into_iter()
            .flatten()
        {
            self.expect("coloring-valid", Ok(()), check_coloring(g, &out.assignment));
        }
        if let Some(chi) = r.chi {
            self.expect("chi-at-least-clique", true, chi.upper() >= r.clique);
        }
        if let Some(Value::Exact(x)) = r.chi_prime {
            if g.edge_count() > 0 {
                self.expect("vizing", true, x == r.delta || x == r.delta + 1);
            }
        }
    }

    fn tcc(&mut self, g: &SimpleGraph, r: &ClassificationReport, expected_type: Option<TotalType>) {
        if g.is_empty() {
            return;
        }
        match r.chi_double_prime {
            Some(Value::Exact(x)) => {
                self.expect("tcc", true, x == r.delta + 1 || x == r.delta + 2);
                if let Some(t) = expected_type {
                    self.expect("total-type", Some(t), r.total_type);
                }
            }
            Some(Value::Range { .. }) if r.refused => {
                self.skip("tcc", "exact search refused above the size cap")
            }
            Some(Value::Range { .. }) => self.skip("tcc", "exact search budget exhausted"),
            None => {}
        }
    }

    /// Chordality is invariant under `simeq`; perfectness under both
    /// reductions and under complementation. (`theta` does not preserve
    /// chordality: it sends `C_4` to `K_2`.)
    fn reduction(&mut self, g: &SimpleGraph) {
        for (key, h) in [("G", g.clone()), ("Gc", g.complement())] {
            let (c, p) = (is_chordal(&h), is_perfect(&h));
            let simeq = reduce_simeq(&h);
            self.expect(
                &format!("reduction-simeq-chordal-{key}"),
                c,
                is_chordal(&simeq),
            );
            self.expect(
                &format!("reduction-simeq-perfect-{key}"),
                p,
                is_perfect(&simeq),
            );
            self.expect(
                &format!("reduction-theta-perfect-{key}"),
                p,
                is_perfect(&reduce_theta(&h)),
            );
            if c {
                self.expect(&format!("chordal-implies-perfect-{key}"), true, p);
            }
        }
        self.expect(
            "perfect-complement",
            is_perfect(g),
            is_perfect(&g.complement()),
        );
    }
}

/// Checks the quotient of a product of chains whose elements are listed in
/// mixed-radix order of `sizes`: `[P]` is `2^n` and the class with support
/// `S` has `prod_{i in S} (a_i - 1)` members.
fn chain_quotient_structure(ctx: &mut Ctx, q: &QuotientPoset, sizes: &[usize]) {
    let coords = mixed_radix(sizes);
    let real: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] > 1).collect();
    ctx.expect("quotient-atoms", real.len(), q.atom_count());
    ctx.expect("quotient-boolean", true, q.is_boolean());
    let factor_of_atom: Vec<usize> = q
        .atoms()
        .iter()
        .map(|&a| coords[a].iter().position(|&x| x > 0).unwrap_or(0))
        .collect();
    for c in q.classes() {
        let expected: usize = c
            .support
            .iter()
            .map(|&i| sizes[factor_of_atom[i]] - 1)
            .product();
        ctx.expect(&format!("class-size-{}", c.label), expected, c.size());
    }
}

/// Elements share a class iff their annihilators coincide.
fn quotient_against_annihilators(ctx: &mut Ctx, p: &FinitePoset, q: &QuotientPoset) {
    let anns: Vec<_> = (0..p.len())
        .map(|x| {
            p.annihilator(&crate::poset::ElementSet::from_indices(p.len(), [x]).expect("in range"))
        })
        .collect::<Result<_>>()
        .expect("nonempty argument");
    let mut ok = true;
    for x in 0..p.len() {
        for y in x + 1..p.len() {
            ok &= (anns[x] == anns[y]) == (q.class_of(x) == q.class_of(y));
        }
    }
    ctx.expect("quotient-annihilator-classes", true, ok);
}

/// The induced 5-cycle of `G(2^n)`, `n >= 5`, on supports 14, 25, 13, 24, 35.
fn five_hole(p: &FinitePoset, q: &QuotientPoset, g: &SimpleGraph) -> Option<Vec<usize>> {
    [[0, 3], [1, 4], [0, 2], [1, 3], [2, 4]]
        .iter()
        .map(|s| {
            let c = q.class_with_support(s)?;
            let x = *q.class(c).members.first()?;
            g.index_of(p.label(x))
        })
        .collect()
}

fn check_poset(
    ctx: &mut Ctx,
    p: &FinitePoset,
    chain_sizes: Option<&[usize]>,
    construction: bool,
) -> Result<ClassificationReport> {
    let g = zdg(p);
    let q = quotient(p);
    let atoms = q.atom_count();
    let big = g.len() > ctx.cap;
    let (mut report, outcomes) = if big {
        let opts = AnalysisOptions {
            chordal: false,
            perfect: false,
            chi: false,
            chi_prime: false,
            chi_double_prime: false,
            limits: ctx.limits,
        };
        classify_graph_detailed(p.name(), "G", &g, Some(atoms), &opts)
    } else {
        classify_graph_detailed(p.name(), "G", &g, Some(atoms), &ctx.options())
    };
    let pred = predict_structure(&q);

    if !big {
        if ctx.wants(Check::ChordalTheorem) {
            match pred {
                Some(pr) => {
                    ctx.expect("chordal-theorem", Some(pr.zdg_chordal), report.chordal);
                    ctx.expect(
                        "complement-chordal-theorem",
                        pr.complement_chordal,
                        is_chordal(&g.complement()),
                    );
                }
                None => ctx.skip("chordal-theorem", "quotient is not Boolean"),
            }
        }
        if ctx.wants(Check::PerfectTheorem) {
            match pred {
                Some(pr) => {
                    ctx.expect("perfect-theorem", Some(pr.zdg_perfect), report.perfect);
                    if atoms >= 5 {
                        let hole = five_hole(p, &q, &g);
                        let found = hole.as_ref().is_some_and(|c| is_chordless_cycle(&g, c));
                        ctx.expect("five-hole-witness", true, found);
                    }
                }
                None => ctx.skip("perfect-theorem", "quotient is not Boolean"),
            }
        }
        if ctx.wants(Check::Coloring) {
            ctx.coloring_invariants(&g, &report, &outcomes);
            if pred.is_some() {
                let expected = if g.is_empty() { 0 } else { atoms };
                ctx.expect("clique-equals-atoms", expected, report.clique);
                ctx.expect("chi-equals-atoms", Some(Value::Exact(expected)), report.chi);
            }
            if chain_sizes.is_some() && g.edge_count() > 0 {
                ctx.expect("class-one", Some(EdgeClass::One), report.edge_class);
            }
        }
        if ctx.wants(Check::Tcc) {
            ctx.tcc(&g, &report, chain_sizes.map(chain_product_type));
        }
        if ctx.wants(Check::Reduction) {
            ctx.reduction(&g);
        }
    } else {
        ctx.skip(
            "graph",
            format!("{} vertices above the family bound {}", g.len(), ctx.cap),
        );
    }

    if ctx.wants(Check::ComplementTcc) {
        if (atoms == 2 || atoms == 3) && p.is_zero_distributive() {
            let cc = complement_total_coloring(p, &ctx.limits)?;
            ctx.expect("complement-coloring-valid", true, cc.valid);
            ctx.expect(
                "complement-within-delta-plus-two",
                true,
                cc.assignment.color_count <= cc.bound,
            );
            if construction {
                ctx.expect(
                    "complement-construction-used",
                    Method::ThreeAtomConstruction,
                    cc.method,
                );
            }
            if let Some(x) = cc.exact {
                ctx.expect("complement-tcc", true, x <= cc.delta + 2);
            }
        } else {
            ctx.skip(
                "complement-tcc",
                "needs a 0-distributive poset with 2 or 3 atoms",
            );
        }
    }
    if ctx.wants(Check::QuotientStructure) {
        if let Some(sizes) = chain_sizes {
            chain_quotient_structure(ctx, &q, sizes);
        }
        quotient_against_annihilators(ctx, p, &q);
    }
    report.agreement = std::mem::take(&mut ctx.agreement);
    Ok(report)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Graph on the divisors `d | n` kept by `keep`, adjacent when `adj` holds,
/// labelled as ideals `(d)` of `Z_n`.
fn divisor_oracle(
    n: u64,
    keep: impl Fn(u64) -> bool,
    adj: impl Fn(u64, u64) -> bool,
) -> SimpleGraph {
    let ds: Vec<u64> = (1..=n)
        .filter(|d| n.is_multiple_of(*d) && keep(*d))
        .collect();
    let labels = ds
        .iter()
        .map(|&d| {
            if d == n {
                "(0)".to_string()
            } else {
                format!("({d})")
            }
        })
        .collect();
    let mut g = SimpleGraph::new("oracle", labels).expect("distinct divisors");
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            if adj(ds[i], ds[j]) {
                g.add_edge(i, j).expect("distinct vertices");
            }
        }
    }
    g
}

fn ideal_arithmetic(ctx: &mut Ctx, n: u64) -> Result<()> {
    let r = RingSpec::Zn(n);
    let rad: u64 = factorize(n).iter().map(|f| f.0).product();
    let lcm = |a: u64, b: u64| a / gcd(a, b) * b;
    let proper = |d: u64| d != 1 && d != n;
    let cg = divisor_oracle(n, |d| d != 1 && d % rad != 0, |a, b| gcd(a, b) == 1);
    ctx.expect(
        "comaximal-oracle",
        true,
        comaximal_graph(&r)?.same_labelled(&cg),
    );
    let ig = divisor_oracle(n, proper, |a, b| lcm(a, b) != n);
    ctx.expect(
        "intersection-oracle",
        true,
        intersection_graph(&r)?.same_labelled(&ig),
    );
    let cag = divisor_oracle(n, proper, |a, b| lcm(n / a, n / b) == n);
    ctx.expect(
        "coannihilating-oracle",
        true,
        coannihilating_graph(&r)?.same_labelled(&cag),
    );
    let ag = divisor_oracle(n, proper, |a, b| gcd(a, b) != 1);
    ctx.expect(
        "annihilating-oracle",
        true,
        annihilating_graph(&r)?.same_labelled(&ag),
    );
    Ok(())
}

fn check_ring(ctx: &mut Ctx, r: &RingSpec) -> Result<ClassificationReport> {
    let f = r.factors()?;
    let n = f.indices.len();
    let fields = f.indices.iter().filter(|&&k| k == 1).count();
    let g = comaximal_graph_star(r)?;
    let big = g.len() > ctx.cap;
    let opts = if big {
        AnalysisOptions {
            chordal: false,
            perfect: false,
            chi: false,
            chi_prime: false,
            chi_double_prime: false,
            limits: ctx.limits,
        }
    } else {
        ctx.options()
    };
    let (mut report, outcomes) = classify_graph_detailed(&r.to_string(), "CG*", &g, Some(n), &opts);

    if ctx.wants(Check::ArtinianIdentity) {
        let chain = annihilating_and_coannihilating(r);
        ctx.expect("cag-ag-chain", true, chain.is_ok());
        let cg = comaximal_graph(r)?;
        let extra: Vec<usize> = (0..g.len())
            .filter(|&v| cg.index_of(g.label(v)).is_none())
            .collect();
        ctx.expect("isolated-count", jacobson_ideal_count(r)?, extra.len());
        ctx.expect(
            "isolated-extra",
            true,
            extra.iter().all(|&v| g.degree(v) == 0),
        );
        let kept: Vec<usize> = (0..g.len()).filter(|v| !extra.contains(v)).collect();
        ctx.expect(
            "cg-induced",
            true,
            g.induced_subgraph(&kept).same_labelled(&cg),
        );
        let lattice = ideal_lattice(r)?;
        let (a, b) = (zdg(&lattice), zdg(&lattice.dual()?));
        if a.len() <= MAX_CANON_VERTICES {
            ctx.expect("dual-zdg-isomorphic", true, graphs_isomorphic(&a, &b)?);
        }
    }
    if ctx.wants(Check::IdealArithmetic) {
        if let RingSpec::Zn(m) = r {
            ideal_arithmetic(ctx, *m)?;
        }
    }
    if ctx.wants(Check::QuotientStructure) {
        let sizes: Vec<usize> = f.indices.iter().map(|&k| k as usize + 1).collect();
        let lattice = ideal_lattice(r)?;
        let q = quotient(&lattice);
        chain_quotient_structure(ctx, &q, &sizes);
    }
    if big {
        ctx.skip(
            "graph",
            format!("{} vertices above the family bound {}", g.len(), ctx.cap),
        );
    } else {
        let (chordal, complement_chordal, perfect) = predicted_family(n, fields);
        if ctx.wants(Check::ChordalTheorem) {
            ctx.expect("chordal-theorem", Some(chordal), report.chordal);
            ctx.expect(
                "complement-chordal-theorem",
                complement_chordal,
                is_chordal(&g.complement()),
            );
        }
        if ctx.wants(Check::PerfectTheorem) {
            ctx.expect("perfect-theorem", Some(perfect), report.perfect);
        }
        if ctx.wants(Check::Coloring) {
            ctx.coloring_invariants(&g, &report, &outcomes);
            if let Some(chi) = report.chi {
                ctx.expect("chi-equals-clique", Value::Exact(report.clique), chi);
            }
            if g.edge_count() > 0 {
                ctx.expect("class-one", Some(EdgeClass::One), report.edge_class);
            }
        }
        if ctx.wants(Check::Tcc) {
            let two_equal = n == 2 && f.indices[0] == f.indices[1];
            let ty = if two_equal {
                TotalType::II
            } else {
                TotalType::I
            };
            ctx.tcc(&g, &report, Some(ty));
        }
        if ctx.wants(Check::Reduction) {
            ctx.reduction(&g);
        }
    }
    report.agreement = std::mem::take(&mut ctx.agreement);
    Ok(report)
}

fn check_graph(ctx: &mut Ctx, g: &SimpleGraph) -> ClassificationReport {
    let (mut report, outcomes) = classify_graph_detailed(g.name(), "G", g, None, &ctx.options());
    if ctx.wants(Check::Coloring) {
        ctx.coloring_invariants(g, &report, &outcomes);
    }
    if ctx.wants(Check::Tcc) {
        ctx.tcc(g, &report, None);
    }
    if ctx.wants(Check::Reduction) {
        ctx.reduction(g);
    }
    report.agreement = std::mem::take(&mut ctx.agreement);
    report
}

fn check_behzad(
    ctx: &mut Ctx,
    g: &SimpleGraph,
    chi_double_prime: usize,
    chi_prime: Option<usize>,
) -> ClassificationReport {
    let (mut report, outcomes) = classify_graph_detailed(g.name(), "G", g, None, &ctx.options());
    ctx.coloring_invariants(g, &report, &outcomes);
    ctx.expect(
        "behzad-total",
        Some(Value::Exact(chi_double_prime)),
        report.chi_double_prime,
    );
    if let Some(x) = chi_prime {
        ctx.expect("behzad-edge", Some(Value::Exact(x)), report.chi_prime);
    }
    report.agreement = std::mem::take(&mut ctx.agreement);
    report
}

fn run_instance(
    inst: &Instance,
    cfg: &VerifyConfig,
    cap: usize,
) -> Result<(ClassificationReport, Vec<Failure>, Vec<Skipped>)> {
    let instance = match inst {
        Instance::Poset { poset, .. } => poset.name().to_string(),
        Instance::Ring(r) => r.to_string(),
        Instance::Graph(g) => g.name().to_string(),
        Instance::Complete(n) => format!("K{n}"),
        Instance::Bipartite(m, n) => format!("K{m},{n}"),
    };
    let mut ctx = Ctx {
        instance,
        checks: &cfg.checks,
        limits: cfg.limits,
        cap,
        agreement: BTreeMap::new(),
        failures: Vec::new(),
        skipped: Vec::new(),
    };
    let report = match inst {
        Instance::Poset {
            poset,
            chain_sizes,
            construction,
        } => check_poset(&mut ctx, poset, chain_sizes.as_deref(), *construction)?,
        Instance::Ring(r) => check_ring(&mut ctx, r)?,
        Instance::Graph(g) => check_graph(&mut ctx, g),
        Instance::Complete(n) => {
            let g = complete_graph(*n).with_name(format!("K{n}"));
            let edge = (*n >= 2).then(|| complete_edge_chromatic(*n));
            check_behzad(&mut ctx, &g, complete_total_chromatic(*n), edge)
        }
        Instance::Bipartite(m, n) => {
            let g = complete_bipartite(*m, *n).with_name(format!("K{m},{n}"));
            check_behzad(
                &mut ctx,
                &g,
                bipartite_total_chromatic(*m, *n),
                Some(*m.max(n)),
            )
        }
    };
    Ok((report, ctx.failures, ctx.skipped))
}

/// Runs every requested check over the family, in parallel. The output
/// order is the family's enumeration order.
pub fn run_verification(cfg: &VerifyConfig) -> Result<VerificationRun> {
    if cfg.checks.is_empty() {
        return Err(Error::InvalidArgument("no checks requested".into()));
    }
    let cap = cfg.bounds.vertex_cap(&cfg.family);
    let insts = instances(cfg)?;
    let work = || -> Result<Vec<_>> {
        insts
            .par_iter()
            .map(|inst| run_instance(inst, cfg, cap))
            .collect()
    };
    let outcomes = match cfg.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let mut run = VerificationRun {
        family: cfg.family.name().to_string(),
        bounds: cfg.bounds,
        checks: cfg.checks.clone(),
        results: Vec::with_capacity(outcomes.len()),
        failures: Vec::new(),
        skipped: Vec::new(),
    };
    for (report, failures, skipped) in outcomes {
        run.results.push(report);
        run.failures.extend(failures);
        run.skipped.extend(skipped);
    }
    Ok(run)
}
