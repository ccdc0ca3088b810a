//! Zero-divisor graphs of finite posets: quotient posets, chordal and perfect
//! recognition, exact colorings, constructive total colorings and the graphs
//! of rings and cyclic groups obtained from ideal and subgroup lattices.

pub mod algebra;
pub mod analysis;
pub mod canon;
pub mod constructive;
pub mod error;
pub mod graph;
pub mod poset;
pub mod quotient;
pub mod verify;
pub mod zdg;

pub use analysis::{
    check_coloring, chromatic_number, classify_graph, clique_number, edge_chromatic_number,
    find_induced_odd_hole, is_chordal, is_perfect, total_chromatic_number, verify_tcc,
    ClassificationReport, ColoringAssignment, ExactLimits, Value,
};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use poset::{BooleanCheck, ElementSet, FinitePoset};
pub use quotient::{quotient, QuotientClass, QuotientPoset};
pub use zdg::{quotient_graph, reduce_simeq, reduce_theta, zdg, zdg_star};
