//! `zdg`: build, analyse and verify zero-divisor graphs of finite posets and
//! the graphs of rings and cyclic groups derived from them.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::input::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "zdg",
    version,
    about = "Zero-divisor graphs of posets: construction, analysis, coloring, verification"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit JSON instead of the default text/CSV.
    #[arg(long, global = true)]
    pub json: bool,
    /// Emit graphs in DOT format.
    #[arg(long, global = true)]
    pub dot: bool,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Largest graph the exact total colorer accepts (vertices).
    #[arg(long, global = true, default_value_t = 14, value_name = "N")]
    pub max_exact_vertices: usize,
    /// Largest graph the exact total colorer accepts (edges).
    #[arg(long, global = true, default_value_t = 40, value_name = "N")]
    pub max_exact_edges: usize,
    /// Worker threads for batch verification.
    #[arg(long, global = true, value_name = "K")]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a poset as JSON.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Print the quotient poset [P]: support label, class size, members.
    Quotient { input: PathBuf },
    /// Build a derived graph from a poset (or graph) file.
    Graph { kind: GraphKind, input: PathBuf },
    /// Classify a graph, or the zero-divisor graph of a poset, as one CSV record.
    Analyze(AnalyzeArgs),
    /// Colorings with their assignments.
    #[command(subcommand)]
    Color(ColorCommand),
    /// Graphs of rings: Z_n or products of SPIRs.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Intersection graphs of subgroups of cyclic groups.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Batch cross-check of the closed-form results over a family.
    Verify(VerifyArgs),
    /// Write a graph (or the zero-divisor graph of a poset) as DOT or JSON.
    Export {
        input: PathBuf,
        /// Graph derived from a poset input.
        #[arg(long, value_enum, default_value_t = GraphKind::Zdg)]
        kind: GraphKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Product of chains with the given sizes, e.g. `3,3`.
    ChainProduct { sizes: String },
    /// Boolean lattice 2^n.
    Boolean { n: usize },
    /// Chain with n elements.
    Chain { n: usize },
    /// Divisors of n under divisibility.
    DivisorLattice { n: u64 },
    /// 0, atoms, coatoms, 1 (n = 4 gives the standard 0-distributive example).
    AtomCoatom { n: usize },
    /// Three-atom poset with atom classes l and pseudocomplement classes m.
    ThreeAtom {
        l: String,
        m: String,
        /// Atom classes as fans instead of chains.
        #[arg(long)]
        fan: bool,
    },
    /// Ideal lattice of Z_n.
    IdealLattice { n: u64 },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// G(P) on the nonzero zero-divisors.
    Zdg,
    /// G*(P) on P without 0 and 1.
    ZdgStar,
    /// Complement of G(P).
    Complement,
    /// G([P]) on the zero-divisor classes.
    Quotient,
    /// Reduction by adjacent twins.
    ReduceSimeq,
    /// Reduction by equal open neighbourhoods.
    ReduceTheta,
    Line,
    Total,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub chordal: bool,
    #[arg(long)]
    pub perfect: bool,
    #[arg(long)]
    pub chi: bool,
    #[arg(long)]
    pub chi_prime: bool,
    #[arg(long)]
    pub chi_double_prime: bool,
    /// Analyse the complement instead.
    #[arg(long)]
    pub complement: bool,
    /// Print the CSV header line first.
    #[arg(long)]
    pub header: bool,
}

#[derive(Subcommand, Debug)]
pub enum ColorCommand {
    /// Total coloring of the complement of G(P) for 2- and 3-atom posets.
    ComplementTotal { input: PathBuf },
    /// Optimal vertex coloring.
    Vertex { input: PathBuf },
    /// Optimal edge coloring.
    Edge { input: PathBuf },
    /// Optimal total coloring (within the exact-search cap).
    Total { input: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingGraphKind {
    Comaximal,
    ComaximalStar,
    Intersection,
    Annihilating,
    Coannihilating,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct RingOutput {
    /// Print a classification record instead of the graph.
    #[arg(long)]
    pub report: bool,
}

#[derive(Subcommand, Debug)]
pub enum RingCommand {
    /// CG(Z_n).
    Comaximal {
        n: u64,
        #[command(flatten)]
        out: RingOutput,
    },
    /// CG*(Z_n).
    ComaximalStar {
        n: u64,
        #[command(flatten)]
        out: RingOutput,
    },
    /// IG(Z_n).
    Intersection {
        n: u64,
        #[command(flatten)]
        out: RingOutput,
    },
    /// AG*(Z_n), after checking CG* = CAG* = complement of AG*.
    Annihilating {
        n: u64,
        #[command(flatten)]
        out: RingOutput,
    },
    /// CAG*(Z_n), after the same check.
    Coannihilating {
        n: u64,
        #[command(flatten)]
        out: RingOutput,
    },
    /// A graph of the product of SPIRs with nilpotency indices `k1,k2,...`.
    Pir {
        indices: String,
        kind: RingGraphKind,
        #[command(flatten)]
        out: RingOutput,
    },
}

#[derive(Subcommand, Debug)]
pub enum GroupCommand {
    /// IG of the cyclic group of order n.
    Intersection {
        n: u64,
        #[command(flatten)]
        out: RingOutput,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    ChainProducts,
    Boolean,
    ThreeAtom,
    Zn,
    Pir,
    CorpusFile,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated checks, or `all`.
    pub checks: String,
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub max_graph_vertices: Option<usize>,
    #[arg(long, default_value_t = 5)]
    pub max_atoms: usize,
    #[arg(long, default_value_t = 5)]
    pub max_factors: usize,
    #[arg(long, default_value_t = 200)]
    pub max_n: u64,
    #[arg(long, default_value_t = 3)]
    pub max_index: u32,
    /// JSON array of posets and graphs, for `--family corpus-file`.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { input::EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(done) => {
            if let Err(e) = done.emit(cli.global.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(input::EXIT_INPUT);
            }
            ExitCode::from(done.code)
        }
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
