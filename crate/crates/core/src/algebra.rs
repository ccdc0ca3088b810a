//! Ideal lattices of `Z_n` and of finite products of special principal ideal
//! rings, and the graphs of rings and cyclic groups built from them.
//!
//! An ideal of `R_1 x ... x R_t` (each `R_i` local with principal maximal
//! ideal `M_i` of nilpotency index `k_i`) is `M_1^{e_1} x ... x M_t^{e_t}`
//! with `0 <= e_i <= k_i`. Sums take the componentwise minimum exponent,
//! intersections the maximum, and `Ann(M_i^e) = M_i^{k_i - e}`.

use std::fmt;

use serde::Serialize;

use crate::analysis::chordal::is_chordal;
use crate::analysis::classify::{classify_graph, AnalysisOptions, ClassificationReport};
use crate::analysis::coloring::EdgeClass;
use crate::analysis::holes::is_perfect;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poset::{divisors_of, mixed_radix, FinitePoset};
use crate::zdg::{zdg, zdg_star};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RingSpec {
    Zn(u64),
    /// Product of SPIRs with the given nilpotency indices.
    ArtinianPir(Vec<u32>),
    /// A single SPIR whose ideal chain has `length` steps.
    LocalChain(u32),
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::ArtinianPir(k) => {
                let parts: Vec<String> = k.iter().map(u32::to_string).collect();
                write!(f, "PIR({})", parts.join(","))
            }
            RingSpec::LocalChain(l) => write!(f, "Local({l})"),
        }
    }
}

/// Prime factorization, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Ring reduced to local factors: primes (for `Z_n`) and nilpotency indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFactors {
    pub primes: Option<Vec<u64>>,
    pub indices: Vec<u32>,
}

impl RingSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::Zn(n) if *n < 2 => Err(Error::InvalidArgument("Z_n needs n >= 2".into())),
            RingSpec::ArtinianPir(k) if k.is_empty() || k.contains(&0) => Err(
                Error::InvalidArgument("nilpotency indices must be positive".into()),
            ),
            RingSpec::LocalChain(0) => Err(Error::InvalidArgument(
                "local chain length must be positive".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn factors(&self) -> Result<LocalFactors> {
        self.validate()?;
        Ok(match self {
            RingSpec::Zn(n) => {
                let f = factorize(*n);
                LocalFactors {
                    primes: Some(f.iter().map(|x| x.0).collect()),
                    indices: f.iter().map(|x| x.1).collect(),
                }
            }
            RingSpec::ArtinianPir(k) => LocalFactors {
                primes: None,
                indices: k.clone(),
            },
            RingSpec::LocalChain(l) => LocalFactors {
                primes: None,
                indices: vec![*l],
            },
        })
    }
}

/// Exponent vectors of all ideals in lattice element order (first factor
/// slowest, element 0 the zero ideal).
fn ideal_exponents(indices: &[u32]) -> Vec<Vec<u32>> {
    let radix: Vec<usize> = indices.iter().map(|&k| k as usize + 1).collect();
    mixed_radix(&radix)
        .into_iter()
        .map(|x| {
            x.iter()
                .zip(indices)
                .map(|(&xi, &k)| k - xi as u32)
                .collect()
        })
        .collect()
}

fn ideal_label(f: &LocalFactors, e: &[u32]) -> String {
    if e.iter().zip(&f.indices).all(|(a, b)| a == b) {
        return "(0)".into();
    }
    if e.iter().all(|&x| x == 0) {
        return "(1)".into();
    }
    match &f.primes {
        Some(primes) => {
            let d: u64 = primes.iter().zip(e).map(|(&p, &x)| p.pow(x)).product();
            format!("({d})")
        }
        None => {
            let parts: Vec<String> = e.iter().map(u32::to_string).collect();
            format!("m({})", parts.join(","))
        }
    }
}

/// Lattice of ideals ordered by inclusion: a product of chains `C_{k_i + 1}`.
pub fn ideal_lattice(r: &RingSpec) -> Result<FinitePoset> {
    let f = r.factors()?;
    let exps = ideal_exponents(&f.indices);
    let labels = exps.iter().map(|e| ideal_label(&f, e)).collect();
    FinitePoset::from_relation(format!("Id({r})"), labels, |a, b| {
        exps[a].iter().zip(&exps[b]).all(|(x, y)| x >= y)
    })
}

/// `CG(R) = G(Id(R)^d)`.
pub fn comaximal_graph(r: &RingSpec) -> Result<SimpleGraph> {
    Ok(zdg(&ideal_lattice(r)?.dual()?).with_name(format!("CG({r})")))
}

/// `CG*(R) = G*(Id(R)^d) = CG(R) + I_m`.
pub fn comaximal_graph_star(r: &RingSpec) -> Result<SimpleGraph> {
    Ok(zdg_star(&ideal_lattice(r)?.dual()?).with_name(format!("CG*({r})")))
}

/// Nonzero ideals inside the Jacobson radical: the `m` in `CG* = CG + I_m`.
pub fn jacobson_ideal_count(r: &RingSpec) -> Result<usize> {
    let f = r.factors()?;
    let zero: Vec<u32> = f.indices.clone();
    Ok(ideal_exponents(&f.indices)
        .iter()
        .filter(|e| e.iter().all(|&x| x >= 1) && **e != zero)
        .count())
}

/// `IG(R) = G*(Id(R))^c`.
pub fn intersection_graph(r: &RingSpec) -> Result<SimpleGraph> {
    Ok(zdg_star(&ideal_lattice(r)?)
        .complement()
        .with_name(format!("IG({r})")))
}

/// Graph on the nonzero proper ideals with adjacency decided from exponent
/// vectors.
fn ideal_graph<F>(r: &RingSpec, name: &str, adjacent: F) -> Result<SimpleGraph>
where
    F: Fn(&[u32], &[u32], &[u32]) -> bool,
{
    let f = r.factors()?;
    let k = f.indices.clone();
    let exps: Vec<Vec<u32>> = ideal_exponents(&k)
        .into_iter()
        .filter(|e| *e != k && e.iter().any(|&x| x > 0))
        .collect();
    let labels = exps.iter().map(|e| ideal_label(&f, e)).collect();
    let mut g = SimpleGraph::new(format!("{name}({r})"), labels)?;
    for i in 0..exps.len() {
        for j in i + 1..exps.len() {
            if adjacent(&exps[i], &exps[j], &k) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

fn ann(e: &[u32], k: &[u32]) -> Vec<u32> {
    e.iter().zip(k).map(|(x, k)| k - x).collect()
}

fn is_zero_ideal(e: &[u32], k: &[u32]) -> bool {
    e == k
}

/// `CAG*(R)`: `I ~ J` iff `Ann(I) cap Ann(J) = (0)`, computed from annihilators.
pub fn coannihilating_graph(r: &RingSpec) -> Result<SimpleGraph> {
    ideal_graph(r, "CAG*", |a, b, k| {
        let (x, y) = (ann(a, k), ann(b, k));
        let meet: Vec<u32> = x.iter().zip(&y).map(|(p, q)| *p.max(q)).collect();
        is_zero_ideal(&meet, k)
    })
}

/// `AG*(R)`: `I ~ J` iff `I + J` has a nonzero annihilator.
pub fn annihilating_graph(r: &RingSpec) -> Result<SimpleGraph> {
    ideal_graph(r, "AG*", |a, b, k| {
        let sum: Vec<u32> = a.iter().zip(b).map(|(p, q)| *p.min(q)).collect();
        !is_zero_ideal(&ann(&sum, k), k)
    })
}

/// `CG*(R) = CAG*(R) = AG*(R)^c`, checked as labelled graphs. Returns
/// `(CAG*, AG*)`.
pub fn annihilating_and_coannihilating(r: &RingSpec) -> Result<(SimpleGraph, SimpleGraph)> {
    let cg = comaximal_graph_star(r)?;
    let cag = coannihilating_graph(r)?;
    let ag = annihilating_graph(r)?;
    if !cg.same_labelled(&cag) {
        return Err(Error::IdentityViolated(format!(
            "CG*({r}) differs from CAG*({r})"
        )));
    }
    if !cag.same_labelled(&ag.complement()) {
        return Err(Error::IdentityViolated(format!(
            "CAG*({r}) differs from the complement of AG*({r})"
        )));
    }
    Ok((cag, ag))
}

/// Cyclic group of the given order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    pub order: u64,
    pub factorization: Vec<(u64, u32)>,
}

impl GroupSpec {
    pub fn cyclic(order: u64) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidArgument(
                "cyclic group order must be at least 2".into(),
            ));
        }
        Ok(Self {
            order,
            factorization: factorize(order),
        })
    }
}

/// Lattice of subgroups of a cyclic group, labelled `C<d>` by subgroup order.
pub fn subgroup_lattice(gs: &GroupSpec) -> Result<FinitePoset> {
    let n = gs.order;
    let divisors = divisors_of(n);
    let labels = divisors.iter().map(|d| format!("C{d}")).collect();
    FinitePoset::from_relation(format!("L(C{n})"), labels, |a, b| {
        divisors[b].is_multiple_of(divisors[a])
    })
}

/// `IG(G) = G*(L(G))^c`.
pub fn subgroup_intersection_graph(gs: &GroupSpec) -> Result<SimpleGraph> {
    Ok(zdg_star(&subgroup_lattice(gs)?)
        .complement()
        .with_name(format!("IG(C{})", gs.order)))
}

/// Closed-form classification of `CG*(R)` in terms of the local factors,
/// compared with the generic recognisers.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyClassification {
    pub ring: String,
    pub maximal_ideals: usize,
    pub fields: usize,
    pub predicted_chordal: bool,
    pub predicted_complement_chordal: bool,
    pub predicted_perfect: bool,
    pub report: ClassificationReport,
}

pub fn predicted_family(maximal_ideals: usize, fields: usize) -> (bool, bool, bool) {
    let chordal = match maximal_ideals {
        1 => true,
        2 => fields >= 1,
        3 => fields == 3,
        _ => false,
    };
    (chordal, maximal_ideals <= 3, maximal_ideals <= 4)
}

pub fn classify_family(r: &RingSpec, opts: &AnalysisOptions) -> Result<FamilyClassification> {
    let f = r.factors()?;
    let n = f.indices.len();
    let fields = f.indices.iter().filter(|&&k| k == 1).count();
    let (chordal, complement_chordal, perfect) = predicted_family(n, fields);
    let g = comaximal_graph_star(r)?;
    let mut report = classify_graph(&r.to_string(), "CG*", &g, Some(n), opts);
    let actual_chordal = report.chordal.unwrap_or_else(|| is_chordal(&g));
    let actual_perfect = report.perfect.unwrap_or_else(|| is_perfect(&g));
    report
        .agreement
        .insert("chordal-theorem".into(), actual_chordal == chordal);
    report.agreement.insert(
        "complement-chordal-theorem".into(),
        is_chordal(&g.complement()) == complement_chordal,
    );
    report
        .agreement
        .insert("perfect-theorem".into(), actual_perfect == perfect);
    if let Some(class) = report.edge_class {
        report
            .agreement
            .insert("class-one".into(), class == EdgeClass::One);
    }
    Ok(FamilyClassification {
        ring: r.to_string(),
        maximal_ideals: n,
        fields,
        predicted_chordal: chordal,
        predicted_complement_chordal: complement_chordal,
        predicted_perfect: perfect,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::posets_isomorphic;
    use crate::poset::{make_chain_product, make_divisor_lattice};

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn lcm(a: u64, b: u64) -> u64 {
        a / gcd(a, b) * b
    }

    fn label(d: u64, n: u64) -> String {
        if d == n {
            "(0)".into()
        } else {
            format!("({d})")
        }
    }

    /// Graph on divisors `d | n` with `keep(d)`, edges where `adj(d, e)`.
    fn divisor_graph(
        n: u64,
        keep: impl Fn(u64) -> bool,
        adj: impl Fn(u64, u64) -> bool,
    ) -> SimpleGraph {
        let ds: Vec<u64> = divisors_of(n).into_iter().filter(|&d| keep(d)).collect();
        let mut g = SimpleGraph::new("oracle", ds.iter().map(|&d| label(d, n)).collect()).unwrap();
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                if adj(ds[i], ds[j]) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn ideal_lattices() {
        let z12 = ideal_lattice(&RingSpec::Zn(12)).unwrap();
        assert_eq!(z12.len(), 6);
        assert!(posets_isomorphic(&z12, &make_chain_product(&[3, 2]).unwrap()).unwrap());
        assert!(posets_isomorphic(&z12, &make_divisor_lattice(12).unwrap()).unwrap());
        assert_eq!(z12.label(z12.zero()), "(0)");
        assert_eq!(z12.label(z12.one().unwrap()), "(1)");
        assert_eq!(ideal_lattice(&RingSpec::Zn(7)).unwrap().len(), 2);
        let pir = ideal_lattice(&RingSpec::ArtinianPir(vec![2, 1])).unwrap();
        assert!(posets_isomorphic(&pir, &make_chain_product(&[3, 2]).unwrap()).unwrap());
        assert_eq!(ideal_lattice(&RingSpec::LocalChain(3)).unwrap().len(), 4);
    }

    #[test]
    fn comaximal_examples() {
        let g = comaximal_graph(&RingSpec::Zn(12)).unwrap();
        let mut labels = g.labels().to_vec();
        labels.sort();
        assert_eq!(labels, vec!["(2)", "(3)", "(4)"]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(g.index_of("(3)").unwrap()), 2);
        assert!(comaximal_graph(&RingSpec::LocalChain(3))
            .unwrap()
            .is_empty());
        let g6 = comaximal_graph(&RingSpec::Zn(6)).unwrap();
        assert_eq!((g6.len(), g6.edge_count()), (2, 1));

        let s = comaximal_graph_star(&RingSpec::Zn(12)).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.degree(s.index_of("(6)").unwrap()), 0);
        assert_eq!(jacobson_ideal_count(&RingSpec::Zn(12)).unwrap(), 1);
        let s = comaximal_graph_star(&RingSpec::Zn(49)).unwrap();
        assert_eq!((s.len(), s.edge_count()), (1, 0));
        assert!(comaximal_graph_star(&RingSpec::Zn(5)).unwrap().is_empty());
    }

    #[test]
    fn annihilating_examples() {
        let (cag, ag) = annihilating_and_coannihilating(&RingSpec::Zn(12)).unwrap();
        assert!(cag.same_labelled(&comaximal_graph_star(&RingSpec::Zn(12)).unwrap()));
        assert_eq!(ag.len(), 4);
        let (cag, ag) = annihilating_and_coannihilating(&RingSpec::Zn(6)).unwrap();
        assert_eq!((cag.edge_count(), ag.edge_count()), (1, 0));
        let (cag, ag) = annihilating_and_coannihilating(&RingSpec::Zn(11)).unwrap();
        assert!(cag.is_empty() && ag.is_empty());
        for k in [vec![2, 1], vec![1, 1, 3], vec![2, 2]] {
            annihilating_and_coannihilating(&RingSpec::ArtinianPir(k)).unwrap();
        }
    }

    #[test]
    fn intersection_examples() {
        let g = intersection_graph(&RingSpec::Zn(8)).unwrap();
        assert_eq!((g.len(), g.edge_count()), (2, 1));
        let g = intersection_graph(&RingSpec::Zn(15)).unwrap();
        assert_eq!((g.len(), g.edge_count()), (2, 0));
        let g = intersection_graph(&RingSpec::Zn(2 * 3 * 5 * 7 * 11)).unwrap();
        assert!(!is_perfect(&g));
    }

    #[test]
    fn subgroup_graphs() {
        let cyc = |n| GroupSpec::cyclic(n).unwrap();
        assert!(subgroup_intersection_graph(&cyc(7)).unwrap().is_empty());
        let g = subgroup_intersection_graph(&cyc(49)).unwrap();
        assert_eq!((g.len(), g.edge_count()), (1, 0));
        for n in [30u64, 12, 72] {
            let sub = subgroup_intersection_graph(&cyc(n)).unwrap();
            let ideal = intersection_graph(&RingSpec::Zn(n)).unwrap();
            // subgroup of order d is the ideal (n / d)
            let renamed: Vec<String> = sub
                .labels()
                .iter()
                .map(|l| label(n / l[1..].parse::<u64>().unwrap(), n))
                .collect();
            let renamed = SimpleGraph::from_edges("s", renamed, &sub.edges()).unwrap();
            assert!(renamed.same_labelled(&ideal), "{n}");
        }
    }

    #[test]
    fn zn_graphs_match_divisor_arithmetic() {
        for n in 2..=300u64 {
            let rad: u64 = factorize(n).iter().map(|f| f.0).product();
            let cg = divisor_graph(n, |d| d != 1 && d % rad != 0, |a, b| gcd(a, b) == 1);
            assert!(
                comaximal_graph(&RingSpec::Zn(n))
                    .unwrap()
                    .same_labelled(&cg),
                "CG {n}"
            );
            let ig = divisor_graph(n, |d| d != 1 && d != n, |a, b| lcm(a, b) != n);
            assert!(
                intersection_graph(&RingSpec::Zn(n))
                    .unwrap()
                    .same_labelled(&ig),
                "IG {n}"
            );
            let cag = divisor_graph(n, |d| d != 1 && d != n, |a, b| lcm(n / a, n / b) == n);
            assert!(
                coannihilating_graph(&RingSpec::Zn(n))
                    .unwrap()
                    .same_labelled(&cag),
                "CAG {n}"
            );
            let ag = divisor_graph(n, |d| d != 1 && d != n, |a, b| gcd(a, b) != 1);
            assert!(
                annihilating_graph(&RingSpec::Zn(n))
                    .unwrap()
                    .same_labelled(&ag),
                "AG {n}"
            );
        }
    }

    #[test]
    fn family_classification() {
        let opts = AnalysisOptions {
            chi: false,
            chi_prime: false,
            chi_double_prime: false,
            ..AnalysisOptions::default()
        };
        let c = classify_family(&RingSpec::Zn(30), &opts).unwrap();
        assert!(c.predicted_chordal && c.report.agrees());
        let c = classify_family(&RingSpec::Zn(12), &opts).unwrap();
        assert!(c.predicted_chordal && c.report.agrees());
        let c = classify_family(&RingSpec::Zn(2 * 3 * 5 * 7 * 11), &opts).unwrap();
        assert!(!c.predicted_perfect && c.report.agrees());
        let c = classify_family(&RingSpec::Zn(60), &AnalysisOptions::default()).unwrap();
        assert_eq!(c.report.agreement.get("class-one"), Some(&true));
        assert!(c.report.agrees());
    }

    #[test]
    fn invalid_specs() {
        assert!(ideal_lattice(&RingSpec::Zn(1)).is_err());
        assert!(ideal_lattice(&RingSpec::ArtinianPir(vec![])).is_err());
        assert!(ideal_lattice(&RingSpec::ArtinianPir(vec![2, 0])).is_err());
        assert!(GroupSpec::cyclic(1).is_err());
    }
}
