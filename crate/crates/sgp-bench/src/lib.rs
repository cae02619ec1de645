//! Shared instances for the benchmark suite.

use sgp_core::{parse_graph_spec, Graph};

/// Graphs the benchmarks exercise, by spec string.
pub fn bench_graphs() -> Vec<(&'static str, Graph)> {
    ["cycle:12", "wheel:9", "petersen", "grid:2", "counterexample:3"]
        .into_iter()
        .map(|spec| (spec, parse_graph_spec(spec).expect("bench specs parse")))
        .collect()
}
