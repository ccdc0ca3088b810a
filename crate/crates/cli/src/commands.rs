use std::path::Path;

use serde::Serialize;
use zdg_core::algebra::{
    annihilating_and_coannihilating, classify_family, comaximal_graph, comaximal_graph_star,
    ideal_lattice, intersection_graph, subgroup_intersection_graph, GroupSpec, RingSpec,
};
use zdg_core::analysis::check::check_coloring;
use zdg_core::analysis::classify::{
    classify_graph, AnalysisOptions, ClassificationReport, CSV_HEADER,
};
use zdg_core::analysis::coloring::{
    chromatic_number_with, edge_chromatic_number_with, total_chromatic_number, ColoringAssignment,
    ColoringKind, ExactLimits,
};
use zdg_core::constructive::complement_total_coloring;
use zdg_core::poset::{
    make_atom_coatom, make_boolean, make_chain, make_chain_product, make_divisor_lattice,
    make_three_atom_poset, ClassShape,
};
use zdg_core::verify::{load_corpus, run_verification, Check, Family, SizeBounds, VerifyConfig};
use zdg_core::{
    quotient, quotient_graph, reduce_simeq, reduce_theta, zdg, zdg_star, Error, SimpleGraph,
};

use crate::input::{
    json_error, parse_list, read_corpus, read_input, read_poset, CliError, CliResult, Done, Input,
    EXIT_OK, EXIT_REFUSED, EXIT_VERIFY,
};
use crate::{
    AnalyzeArgs, Cli, ColorCommand, Command, FamilyArg, GenCommand, Global, GraphKind,
    GroupCommand, RingCommand, RingGraphKind, RingOutput, VerifyArgs,
};

pub fn run(cli: &Cli) -> CliResult<Done> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen(cmd) => gen(cmd),
        Command::Quotient { input } => quotient_table(g, input),
        Command::Graph { kind, input } => {
            let graph = derived_graph(*kind, read_input(input)?)?;
            Ok(Done::ok(graph_text(g, &graph, false)))
        }
        Command::Analyze(args) => analyze(g, args),
        Command::Color(cmd) => color(g, cmd),
        Command::Ring(cmd) => ring(g, cmd),
        Command::Group(GroupCommand::Intersection { n, out }) => {
            let gs = GroupSpec::cyclic(*n)?;
            let graph = subgroup_intersection_graph(&gs)?;
            graph_or_report(g, &graph, &format!("C{n}"), "IG", None, *out)
        }
        Command::Verify(args) => verify(g, args),
        Command::Export { input, kind } => {
            let graph = match read_input(input)? {
                Input::Graph(graph) => graph,
                poset => derived_graph(*kind, poset)?,
            };
            Ok(Done::ok(graph_text(g, &graph, !g.json)))
        }
    }
}

fn limits(g: &Global) -> ExactLimits {
    ExactLimits {
        max_total_vertices: g.max_exact_vertices,
        max_total_edges: g.max_exact_edges,
        ..ExactLimits::default()
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn graph_text(g: &Global, graph: &SimpleGraph, dot_default: bool) -> String {
    if g.dot || dot_default {
        graph.to_dot()
    } else {
        pretty(&graph.to_json())
    }
}

fn gen(cmd: &GenCommand) -> CliResult<Done> {
    let p = match cmd {
        GenCommand::ChainProduct { sizes } => make_chain_product(&parse_list(sizes)?)?,
        GenCommand::Boolean { n } => make_boolean(*n)?,
        GenCommand::Chain { n } => make_chain(*n)?,
        GenCommand::DivisorLattice { n } => make_divisor_lattice(*n)?,
        GenCommand::AtomCoatom { n } => make_atom_coatom(*n)?,
        GenCommand::ThreeAtom { l, m, fan } => {
            let triple = |s: &str| -> CliResult<[usize; 3]> {
                let v: Vec<usize> = parse_list(s)?;
                v.try_into()
                    .map_err(|_| CliError::input(format!("expected three sizes, got {s:?}")))
            };
            let shape = if *fan {
                ClassShape::Fan
            } else {
                ClassShape::Chain
            };
            make_three_atom_poset(triple(l)?, triple(m)?, shape)?
        }
        GenCommand::IdealLattice { n } => ideal_lattice(&RingSpec::Zn(*n))?,
    };
    Ok(Done::ok(pretty(&p.to_json())))
}

#[derive(Serialize)]
struct ClassJson {
    label: String,
    support: Vec<usize>,
    size: usize,
    members: Vec<String>,
    dense: bool,
}

#[derive(Serialize)]
struct QuotientJson {
    name: String,
    atoms: Vec<String>,
    boolean: bool,
    classes: Vec<ClassJson>,
}

fn quotient_table(g: &Global, input: &Path) -> CliResult<Done> {
    let p = read_poset(input)?;
    let q = quotient(&p);
    let classes: Vec<ClassJson> = q
        .classes()
        .iter()
        .map(|c| ClassJson {
            label: c.label.clone(),
            support: c.support.iter().map(|i| i + 1).collect(),
            size: c.size(),
            members: c.members.iter().map(|&x| p.label(x).to_string()).collect(),
            dense: c.dense,
        })
        .collect();
    if g.json {
        let doc = QuotientJson {
            name: p.name().to_string(),
            atoms: q.atoms().iter().map(|&a| p.label(a).to_string()).collect(),
            boolean: q.is_boolean(),
            classes,
        };
        return Ok(Done::ok(pretty(&doc)));
    }
    let width = classes
        .iter()
        .map(|c| c.label.len())
        .max()
        .unwrap_or(0)
        .max("class".len());
    let mut out = format!("{:<width$}  {:>4}  members\n", "class", "size");
    for c in &classes {
        out.push_str(&format!(
            "{:<width$}  {:>4}  {}\n",
            c.label,
            c.size,
            c.members.join(" ")
        ));
    }
    Ok(Done::ok(out))
}

fn derived_graph(kind: GraphKind, input: Input) -> CliResult<SimpleGraph> {
    let from_graph = |g: SimpleGraph| -> CliResult<SimpleGraph> {
        Ok(match kind {
            GraphKind::Complement => g.complement(),
            GraphKind::ReduceSimeq => reduce_simeq(&g),
            GraphKind::ReduceTheta => reduce_theta(&g),
            GraphKind::Line => g.line_graph(),
            GraphKind::Total => g.total_graph(),
            GraphKind::Zdg => g,
            GraphKind::ZdgStar | GraphKind::Quotient => {
                return Err(CliError::input("this graph kind needs a poset input"));
            }
        })
    };
    match input {
        Input::Graph(g) => from_graph(g),
        Input::Poset(p) => match kind {
            GraphKind::ZdgStar => Ok(zdg_star(&p)),
            GraphKind::Quotient => Ok(quotient_graph(&quotient(&p))),
            _ => from_graph(zdg(&p)),
        },
    }
}

fn analyze(g: &Global, args: &AnalyzeArgs) -> CliResult<Done> {
    let (name, graph, atoms) = match read_input(&args.input)? {
        Input::Poset(p) => (p.name().to_string(), zdg(&p), Some(p.atoms().len())),
        Input::Graph(graph) => (graph.name().to_string(), graph, None),
    };
    let (graph, key) = if args.complement {
        (graph.complement(), "Gc")
    } else {
        (graph, "G")
    };
    let any = args.chordal || args.perfect || args.chi || args.chi_prime || args.chi_double_prime;
    let opts = AnalysisOptions {
        chordal: !any || args.chordal,
        perfect: !any || args.perfect,
        chi: !any || args.chi,
        chi_prime: !any || args.chi_prime,
        chi_double_prime: !any || args.chi_double_prime,
        limits: limits(g),
    };
    let report = classify_graph(&name, key, &graph, atoms, &opts);
    Ok(report_done(g, &report, args.header))
}

fn report_done(g: &Global, report: &ClassificationReport, header: bool) -> Done {
    let text = if g.json {
        pretty(report)
    } else if header {
        format!("{CSV_HEADER}\n{}\n", report.csv_row())
    } else {
        format!("{}\n", report.csv_row())
    };
    let code = if report.refused {
        eprintln!("note: exact total-coloring search refused; chiDoublePrime is an interval");
        EXIT_REFUSED
    } else if !report.agrees() {
        EXIT_VERIFY
    } else {
        EXIT_OK
    };
    Done { text, code }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn assignment_csv(graph: &SimpleGraph, a: &ColoringAssignment) -> String {
    let mut out = String::from("item,color\n");
    for (v, c) in a.vertex_colors.iter().enumerate() {
        out.push_str(&format!("{},{c}\n", csv_field(graph.label(v))));
    }
    for &((u, v), c) in &a.edge_colors {
        let item = format!("{}--{}", graph.label(u), graph.label(v));
        out.push_str(&format!("{},{c}\n", csv_field(&item)));
    }
    out
}

#[derive(Serialize)]
struct ColoringJson<'a> {
    graph: String,
    kind: ColoringKind,
    colors: usize,
    value: String,
    valid: bool,
    vertices: Vec<(&'a str, usize)>,
    edges: Vec<(&'a str, &'a str, usize)>,
}

fn coloring_json<'a>(
    graph: &'a SimpleGraph,
    a: &ColoringAssignment,
    value: String,
    valid: bool,
) -> ColoringJson<'a> {
    ColoringJson {
        graph: graph.name().to_string(),
        kind: a.kind,
        colors: a.color_count,
        value,
        valid,
        vertices: a
            .vertex_colors
            .iter()
            .enumerate()
            .map(|(v, &c)| (graph.label(v), c))
            .collect(),
        edges: a
            .edge_colors
            .iter()
            .map(|&((u, v), c)| (graph.label(u), graph.label(v), c))
            .collect(),
    }
}

fn color(g: &Global, cmd: &ColorCommand) -> CliResult<Done> {
    let lim = limits(g);
    if let ColorCommand::ComplementTotal { input } = cmd {
        let p = read_poset(input)?;
        let cc = complement_total_coloring(&p, &lim)?;
        if let Some(why) = &cc.construction_refused {
            eprintln!(
                "note: explicit construction not used ({why}); method {:?}",
                cc.method
            );
        }
        let ok = cc.valid && cc.assignment.color_count <= cc.bound;
        let text = if g.json {
            let value = cc
                .exact
                .map_or_else(|| cc.assignment.color_count.to_string(), |x| x.to_string());
            pretty(&coloring_json(&cc.graph, &cc.assignment, value, cc.valid))
        } else {
            format!(
                "{}colors={} delta={} bound={} valid={}\n",
                assignment_csv(&cc.graph, &cc.assignment),
                cc.assignment.color_count,
                cc.delta,
                cc.bound,
                cc.valid
            )
        };
        let code = if ok { EXIT_OK } else { EXIT_VERIFY };
        return Ok(Done { text, code });
    }
    let input = match cmd {
        ColorCommand::Vertex { input }
        | ColorCommand::Edge { input }
        | ColorCommand::Total { input } => input,
        ColorCommand::ComplementTotal { .. } => unreachable!("handled above"),
    };
    let graph = match read_input(input)? {
        Input::Poset(p) => zdg(&p),
        Input::Graph(graph) => graph,
    };
    let out = match cmd {
        ColorCommand::Vertex { .. } => chromatic_number_with(&graph, &lim),
        ColorCommand::Edge { .. } => edge_chromatic_number_with(&graph, &lim),
        _ => total_chromatic_number(&graph, &lim),
    };
    let valid = check_coloring(&graph, &out.assignment).is_ok();
    let text = if g.json {
        pretty(&coloring_json(
            &graph,
            &out.assignment,
            out.value.to_string(),
            valid,
        ))
    } else {
        format!(
            "{}colors={} value={} delta={} valid={valid}\n",
            assignment_csv(&graph, &out.assignment),
            out.assignment.color_count,
            out.value,
            graph.max_degree()
        )
    };
    let code = if !valid {
        EXIT_VERIFY
    } else if out.refused {
        eprintln!("note: exact search refused above the size cap; the coloring is greedy");
        EXIT_REFUSED
    } else {
        EXIT_OK
    };
    Ok(Done { text, code })
}

fn graph_or_report(
    g: &Global,
    graph: &SimpleGraph,
    instance: &str,
    key: &str,
    family: Option<&RingSpec>,
    out: RingOutput,
) -> CliResult<Done> {
    if !out.report {
        return Ok(Done::ok(graph_text(g, graph, false)));
    }
    let opts = AnalysisOptions {
        limits: limits(g),
        ..AnalysisOptions::default()
    };
    let report = match family {
        Some(r) => classify_family(r, &opts)?.report,
        None => classify_graph(instance, key, graph, None, &opts),
    };
    Ok(report_done(g, &report, true))
}

fn ring_graph(g: &Global, r: &RingSpec, kind: RingGraphKind, out: RingOutput) -> CliResult<Done> {
    let name = r.to_string();
    match kind {
        RingGraphKind::Comaximal => {
            graph_or_report(g, &comaximal_graph(r)?, &name, "CG", None, out)
        }
        RingGraphKind::ComaximalStar => {
            graph_or_report(g, &comaximal_graph_star(r)?, &name, "CG*", Some(r), out)
        }
        RingGraphKind::Intersection => {
            graph_or_report(g, &intersection_graph(r)?, &name, "IG", None, out)
        }
        RingGraphKind::Annihilating => {
            let (_, ag) = annihilating_and_coannihilating(r)?;
            graph_or_report(g, &ag, &name, "AG*", None, out)
        }
        RingGraphKind::Coannihilating => {
            let (cag, _) = annihilating_and_coannihilating(r)?;
            graph_or_report(g, &cag, &name, "CAG*", None, out)
        }
    }
}

fn ring(g: &Global, cmd: &RingCommand) -> CliResult<Done> {
    let (r, kind, out) = match cmd {
        RingCommand::Comaximal { n, out } => (RingSpec::Zn(*n), RingGraphKind::Comaximal, *out),
        RingCommand::ComaximalStar { n, out } => {
            (RingSpec::Zn(*n), RingGraphKind::ComaximalStar, *out)
        }
        RingCommand::Intersection { n, out } => {
            (RingSpec::Zn(*n), RingGraphKind::Intersection, *out)
        }
        RingCommand::Annihilating { n, out } => {
            (RingSpec::Zn(*n), RingGraphKind::Annihilating, *out)
        }
        RingCommand::Coannihilating { n, out } => {
            (RingSpec::Zn(*n), RingGraphKind::Coannihilating, *out)
        }
        RingCommand::Pir { indices, kind, out } => {
            (RingSpec::ArtinianPir(parse_list(indices)?), *kind, *out)
        }
    };
    r.validate()?;
    ring_graph(g, &r, kind, out)
}

fn verify(g: &Global, args: &VerifyArgs) -> CliResult<Done> {
    let checks: Vec<Check> = if args.checks == "all" {
        Check::ALL.to_vec()
    } else {
        args.checks
            .split(',')
            .map(|c| c.trim().parse::<Check>())
            .collect::<Result<_, Error>>()?
    };
    let family = match args.family {
        FamilyArg::ChainProducts => Family::ChainProducts,
        FamilyArg::Boolean => Family::Boolean,
        FamilyArg::ThreeAtom => Family::ThreeAtom,
        FamilyArg::Zn => Family::Zn,
        FamilyArg::Pir => Family::Pir,
        FamilyArg::CorpusFile => {
            let path = args
                .corpus
                .as_deref()
                .ok_or_else(|| CliError::input("--family corpus-file needs --corpus <path>"))?;
            let text = read_corpus(path)?;
            let items = load_corpus(&text).map_err(|e| match e {
                Error::Json(j) => json_error(path, &j),
                other => CliError::input(format!("{}: {other}", path.display())),
            })?;
            Family::CorpusFile(items)
        }
    };
    let cfg = VerifyConfig {
        family,
        checks,
        bounds: SizeBounds {
            max_factors: args.max_factors,
            max_graph_vertices: args.max_graph_vertices,
            max_atoms: args.max_atoms,
            max_n: args.max_n,
            max_index: args.max_index,
        },
        limits: limits(g),
        jobs: g.jobs,
    };
    let run = run_verification(&cfg)?;
    let text = if g.json {
        pretty(&run)
    } else {
        let mut s = format!("{CSV_HEADER}\n");
        for r in &run.results {
            s.push_str(&r.csv_row());
            s.push('\n');
        }
        s
    };
    for f in &run.failures {
        eprintln!("FAIL {f}");
    }
    eprintln!(
        "family={} instances={} failures={} skipped={}",
        run.family,
        run.results.len(),
        run.failures.len(),
        run.skipped.iter().filter(|s| s.theorem != "graph").count()
    );
    if run.refused() {
        eprintln!("note: some checks were skipped because the exact search was refused");
    }
    let code = if run.passed() { EXIT_OK } else { EXIT_VERIFY };
    Ok(Done { text, code })
}
