//! Recognition, exact coloring and classification.

pub mod check;
pub mod chordal;
pub mod classify;
pub mod coloring;
pub mod holes;

pub use check::check_coloring;
pub use chordal::{chordality, is_chordal, lex_bfs, Chordality};
pub use classify::{
    classify_graph, classify_graph_detailed, AnalysisOptions, ClassificationReport,
    ColoringOutcomes,
};
pub use coloring::{
    chromatic_number, clique_number, edge_chromatic_number, independence_number,
    total_chromatic_number, verify_tcc, ColoringAssignment, ColoringKind, ColoringOutcome,
    EdgeClass, ExactLimits, TotalType, Value,
};
pub use holes::{find_induced_odd_hole, is_perfect};
