//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line
//! straight to stdout (bypassing the harness capture) and the test fails if
//! any criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zdg_core::analysis::chordal::is_chordless_cycle;
use zdg_core::analysis::coloring::{ExactLimits, Value};
use zdg_core::constructive::{complement_exact_total, complement_total_coloring, Method};
use zdg_core::poset::{
    make_atom_coatom, make_boolean, make_chain_product, make_class_poset, ClassShape,
};
use zdg_core::verify::{
    chain_product_tuples, run_verification, three_atom_hypothesis_instances,
    uniform_three_atom_poset, Check, Family, SizeBounds, VerificationRun, VerifyConfig,
};
use zdg_core::{
    check_coloring, is_chordal, is_perfect, quotient, reduce_simeq, reduce_theta, zdg, SimpleGraph,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn verify(family: Family, checks: &[Check], bounds: SizeBounds) -> VerificationRun {
    run_verification(&VerifyConfig {
        family,
        checks: checks.to_vec(),
        bounds,
        limits: ExactLimits::default(),
        jobs: None,
    })
    .expect("verification runs")
}

fn summarize(runs: &[VerificationRun]) -> (bool, String) {
    let failures: Vec<String> = runs
        .iter()
        .flat_map(|r| r.failures.iter().map(|f| f.to_string()))
        .collect();
    let instances: usize = runs.iter().map(|r| r.results.len()).sum();
    let mut detail = format!("{instances} instances, {} mismatches", failures.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first: {first}"));
    }
    (failures.is_empty(), detail)
}

fn timed(limit: Duration, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = f();
    let took = start.elapsed();
    Outcome {
        pass: ok && took < limit,
        detail: format!(
            "{detail}; {:.2}s of {}s",
            took.as_secs_f64(),
            limit.as_secs()
        ),
    }
}

fn chordality() -> Outcome {
    timed(Duration::from_secs(10), || {
        let checks = [Check::ChordalTheorem];
        let chains = verify(Family::ChainProducts, &checks, SizeBounds::default());
        let boolean = verify(Family::Boolean, &checks, SizeBounds::default());
        summarize(&[chains, boolean])
    })
}

fn perfectness() -> Outcome {
    timed(Duration::from_secs(30), || {
        let checks = [Check::PerfectTheorem];
        let chains = verify(Family::ChainProducts, &checks, SizeBounds::default());
        let boolean = verify(Family::Boolean, &checks, SizeBounds::default());
        let (mut ok, mut detail) = summarize(&[chains, boolean]);
        let p = make_boolean(5).unwrap();
        let g = zdg(&p);
        let hole: Option<Vec<usize>> = ["q1vq4", "q2vq5", "q1vq3", "q2vq4", "q3vq5"]
            .iter()
            .map(|l| g.index_of(l))
            .collect();
        let verbatim = hole.is_some_and(|c| is_chordless_cycle(&g, &c));
        ok &= verbatim && !is_perfect(&g);
        detail.push_str(&format!("; 5-hole 14-25-13-24-35 in G(2^5): {verbatim}"));
        (ok, detail)
    })
}

fn coloring_numbers() -> Outcome {
    let run = verify(
        Family::ChainProducts,
        &[Check::Coloring, Check::Tcc],
        SizeBounds::default(),
    );
    let undecided = run.skipped.iter().filter(|s| s.theorem != "graph").count();
    let exact = run.results.iter().all(|r| {
        matches!(r.chi, Some(Value::Exact(_)))
            && matches!(r.chi_double_prime, Some(Value::Exact(_)))
    });
    let (ok, detail) = summarize(&[run]);
    Outcome {
        pass: ok && undecided == 0 && exact,
        detail: format!("{detail}, {undecided} undecided"),
    }
}

fn behzad() -> Outcome {
    let run = verify(
        Family::CorpusFile(Vec::new()),
        &[Check::Behzad],
        SizeBounds::default(),
    );
    let (ok, detail) = summarize(&[run]);
    Outcome { pass: ok, detail }
}

fn constructive() -> Outcome {
    let limits = ExactLimits::default();
    let instances = three_atom_hypothesis_instances();
    let mut ok = instances.len() >= 25;
    let mut exact_runs = 0;
    // the smallest instances sit just above the default cap; search them
    // exactly with a raised one, the rest only when a Delta + 1 coloring turns up
    let raised = ExactLimits {
        max_total_vertices: 13,
        max_total_edges: 80,
        ..limits
    };
    for p in &instances {
        let c = complement_total_coloring(p, &limits).unwrap();
        ok &= c.method == Method::ThreeAtomConstruction;
        ok &= check_coloring(&c.graph, &c.assignment).is_ok();
        ok &= c.assignment.color_count <= c.delta + 2;
        let cap = if zdg(p).len() <= 13 { &raised } else { &limits };
        let exact = c.exact.or_else(|| complement_exact_total(p, cap));
        if let Some(x) = exact {
            exact_runs += 1;
            ok &= x == c.delta + 1 || x == c.delta + 2;
        }
    }
    let uniform = uniform_three_atom_poset();
    let c = complement_total_coloring(&uniform, &limits).unwrap();
    let uniform_ok = c.graph.len() == 24
        && c.delta == 19
        && check_coloring(&c.graph, &c.assignment).is_ok()
        && c.assignment.color_count <= 21;
    let run = verify(
        Family::ThreeAtom,
        &[Check::ComplementTcc],
        SizeBounds::default(),
    );
    let (run_ok, detail) = summarize(&[run]);
    Outcome {
        pass: ok && uniform_ok && run_ok,
        detail: format!(
            "{} hypothesis instances, {exact_runs} with exact chi''; uniform-4: {} colors, delta {}, |V| {}; {detail}",
            instances.len(),
            c.assignment.color_count,
            c.delta,
            c.graph.len()
        ),
    }
}

fn brute_chordal(g: &SimpleGraph) -> bool {
    let n = g.len();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).ones().fold(0u32, |m, w| m | 1 << w))
        .collect();
    for s in 0u32..1 << n {
        if s.count_ones() < 4 {
            continue;
        }
        let all_deg_two = (0..n)
            .filter(|v| s >> v & 1 == 1)
            .all(|v| (adj[v] & s).count_ones() == 2);
        if !all_deg_two {
            continue;
        }
        let start = s.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & s & !seen;
            seen |= new;
            frontier |= new;
        }
        if seen == s {
            return false;
        }
    }
    true
}

/// chi = omega on every induced subgraph, by subset dynamic programming.
fn brute_perfect(g: &SimpleGraph) -> bool {
    let n = g.len();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).ones().fold(0u32, |m, w| m | 1 << w))
        .collect();
    let size = 1usize << n;
    let mut independent = vec![false; size];
    let mut clique = vec![0u8; size];
    let mut chi = vec![0u8; size];
    independent[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && adj[v] & s as u32 == 0;
        clique[s] = clique[rest].max(1 + clique[rest & adj[v] as usize]);
        let mut best = u8::MAX;
        let mut t = rest;
        loop {
            let i = t | 1 << v;
            if independent[i] {
                best = best.min(chi[s & !i] + 1);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        chi[s] = best;
        if chi[s] != clique[s] {
            return false;
        }
    }
    true
}

fn reduction_corpus() -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    let mut posets: Vec<_> = chain_product_tuples(5, 16)
        .into_iter()
        .map(|t| make_chain_product(&t).unwrap())
        .collect();
    posets.extend((1..=4).map(|n| make_boolean(n).unwrap()));
    posets.push(make_atom_coatom(3).unwrap());
    posets.push(make_atom_coatom(4).unwrap());
    for (l, m) in [
        ([1, 1, 1], [1, 1, 1]),
        ([2, 1, 1], [1, 2, 1]),
        ([2, 2, 2], [1, 1, 1]),
        ([3, 3, 3], [1, 1, 1]),
    ] {
        for shape in [ClassShape::Chain, ClassShape::Fan] {
            posets.push(zdg_core::poset::make_three_atom_poset(l, m, shape).unwrap());
        }
    }
    posets.push(
        make_class_poset(
            4,
            &[(1, 2), (2, 1), (4, 1), (8, 2), (3, 1), (12, 2)],
            ClassShape::Chain,
            true,
        )
        .unwrap(),
    );
    for p in &posets {
        let g = zdg(p);
        if g.len() <= 16 {
            out.push(g.clone());
            out.push(g.complement());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x2d64);
    for i in 0..160 {
        let n = rng.random_range(1..=10);
        let density = rng.random_range(0.15..0.85);
        let mut g = SimpleGraph::with_vertices(format!("random-{i}"), n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(density) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        out.push(g);
    }
    out
}

fn reductions() -> Outcome {
    let corpus = reduction_corpus();
    let mut mismatches = Vec::new();
    let mut oracle_runs = 0;
    for (i, g) in corpus.iter().enumerate() {
        let (c, p) = (is_chordal(g), is_perfect(g));
        let simeq = reduce_simeq(g);
        let theta = reduce_theta(g);
        let mut ok = c == is_chordal(&simeq) && p == is_perfect(&simeq) && p == is_perfect(&theta);
        if g.len() <= 12 {
            oracle_runs += 1;
            ok &= c == brute_chordal(g) && p == brute_perfect(g);
            ok &= is_chordal(&simeq) == brute_chordal(&simeq)
                && is_perfect(&theta) == brute_perfect(&theta);
        }
        if !ok {
            mismatches.push(format!("#{i} {}", g.name()));
        }
    }
    Outcome {
        pass: corpus.len() >= 200 && mismatches.is_empty(),
        detail: format!(
            "{} graphs, {oracle_runs} against brute force, {} mismatches {:?}",
            corpus.len(),
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn ring_identities() -> Outcome {
    let bounds = SizeBounds {
        max_n: 1000,
        max_graph_vertices: Some(40),
        ..SizeBounds::default()
    };
    let zn = verify(
        Family::Zn,
        &[
            Check::IdealArithmetic,
            Check::ArtinianIdentity,
            Check::ChordalTheorem,
            Check::PerfectTheorem,
        ],
        bounds,
    );
    let classified = zn.results.iter().filter(|r| r.chordal.is_some()).count();
    let pir = verify(
        Family::Pir,
        &[Check::ArtinianIdentity, Check::ChordalTheorem],
        SizeBounds::default(),
    );
    let (ok, detail) = summarize(&[zn, pir]);
    Outcome {
        pass: ok,
        detail: format!("{detail}; {classified} of Z_2..Z_1000 classified (graph <= 40 vertices)"),
    }
}

fn quotient_structure() -> Outcome {
    let mut ok = true;
    let mut count = 0;
    let mut tuples = vec![vec![]];
    for _ in 0..5 {
        let mut next = Vec::new();
        for t in &tuples {
            let lo = t.last().copied().unwrap_or(2);
            for a in lo..=4 {
                let mut t2: Vec<usize> = t.clone();
                t2.push(a);
                next.push(t2);
            }
        }
        for t in &next {
            count += 1;
            let p = make_chain_product(t).unwrap();
            let q = quotient(&p);
            ok &= q.atom_count() == t.len() && q.is_boolean();
            ok &= q.as_poset().unwrap().is_boolean() == zdg_core::BooleanCheck::Boolean;
            // the factor of an atom is the nonzero coordinate of its label
            let factor: Vec<usize> = q
                .atoms()
                .iter()
                .map(|&a| {
                    let label = p.label(a);
                    label
                        .trim_matches(|c| c == '(' || c == ')')
                        .split(',')
                        .position(|x| x != "0")
                        .unwrap()
                })
                .collect();
            for c in q.classes() {
                let expected: usize = c.support.iter().map(|&i| t[factor[i]] - 1).product();
                ok &= c.size() == expected;
            }
        }
        tuples = next;
    }

    let atom_coatom = make_atom_coatom(4).unwrap();
    let q = quotient(&atom_coatom);
    let mut atom_coatom_ok = true;
    for i in 0..4 {
        for j in i + 1..4 {
            atom_coatom_ok &= q.class_with_support(&[i, j]).is_none();
        }
        let star = q.class_pseudocomplement(q.atom_class(i));
        let others: Vec<usize> = (0..4).filter(|&k| k != i).collect();
        atom_coatom_ok &= star.is_ok_and(|c| q.class(c).support == others);
    }
    Outcome {
        pass: ok && atom_coatom_ok,
        detail: format!("{count} chain products with factors of size 2..4; atom-coatom poset: two-atom classes empty, pseudocomplements found: {atom_coatom_ok}"),
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        (
            "chordality theorem on chain products and Boolean lattices",
            chordality,
        ),
        ("perfectness theorem and the 5-hole witness", perfectness),
        (
            "chromatic, edge-chromatic and total-chromatic numbers of chain products",
            coloring_numbers,
        ),
        (
            "Behzad formulas for complete and complete bipartite graphs",
            behzad,
        ),
        (
            "constructive total coloring of three-atom complements",
            constructive,
        ),
        ("reduction invariance on a 200-graph corpus", reductions),
        (
            "ring and group identities for Z_n, n <= 1000",
            ring_identities,
        ),
        (
            "quotient structure of chain products and the atom/coatom poset",
            quotient_structure,
        ),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let status = if o.pass { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {}: {status} {name} ({})", i + 1, o.detail).unwrap();
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
