//! Exact computation of Steiner general position invariants of finite graphs.
//!
//! The crate is organized around five building blocks:
//!
//! * [`graph`] — an immutable simple-graph type plus constructors for the
//!   families and products the invariants are studied on (paths, cycles,
//!   stars, wheels, fans, joins, lexicographic products, grid windows,
//!   split graphs, subdivided wheels) and structural queries such as
//!   vertex connectivity and clique number.
//! * [`steiner`] — Steiner distances: a subset dynamic program over a
//!   terminal set, a brute-force connected-subgraph oracle that stays
//!   independent of the DP, and the "lies on some Steiner tree" predicate.
//! * [`search`] — decision procedures and exact branch-and-bound maximum
//!   searches for the set invariants: `sgp_k`, `sω_k`, `sjc_k`,
//!   `sgp_[k:l]` and `gp`, together with set-family enumeration.
//! * [`formula`] — the closed-form values for trees, cycles, joins,
//!   lexicographic products, split graphs and grids, each with its
//!   applicability preconditions checked up front.
//! * [`verify`] — a suite runner that replays every formula against the
//!   exact searches and every fast algorithm against its naive oracle,
//!   producing a deterministic machine-readable report.
//!
//! Everything here is exact integer combinatorics: there are no tolerances
//! and no floating-point anywhere in the result path.

pub mod bits;
pub mod error;
pub mod formula;
pub mod graph;
pub mod rng;
pub mod search;
pub mod steiner;
pub mod verify;

pub use error::{Error, Result};
pub use formula::{
    cycle_sgp_formula, cycle_sjc_formula, family_sgp_formula, grid_sgp_witness, join_sgp_formula,
    join_somega_formula, lex_gp_formula, lex_sgp_lower_bound, path_sjc_formula,
    split_sgp_lower_bound, tree_sgp_formula, FormulaResult, FormulaSource, GridWitness,
    JoinFamily,
};
pub use graph::{
    cartesian_grid, clique_number, complement, induced_subgraph, join, lexicographic,
    parse_graph_spec, split_graph, subdivided_wheel, vertex_connectivity, FamilySpec, Graph,
    GridSpec, Provenance, VertexSet,
};
pub use search::{
    enumerate_interval_sgp_sets, gp, is_general_position, is_interval_sgp, is_k_sgp,
    is_k_steiner_clique, is_steiner_join_critical, monotonicity_probe, partition_by_isolation,
    sgp, sgp_interval, sjc, somega, Budget, Exactness, InvariantKind, InvariantResult,
    MonotonicityReport, SearchStats, SetFamily, SgpPartition,
};
pub use steiner::{
    naive_steiner_distance, on_some_steiner_tree, steiner_distance, steiner_table, Distance,
    SteinerTable,
};
pub use verify::{
    naive_is_k_sgp, random_graph, run_suite, CaseRecord, SuiteConfig, SuiteName, SuiteReport,
    Verdict, DEFAULT_SEED,
};
