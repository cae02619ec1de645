//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`). Everything is exact integer
//! combinatorics — zero tolerance anywhere.

use sgp_core::*;

fn line(number: u32, what: &str, pass: bool, detail: String) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("criterion {number:02} [{tag}] {what}: {detail}");
}

fn run(name: SuiteName) -> SuiteReport {
    run_suite(name, &SuiteConfig::default()).expect("suite runs")
}

#[test]
fn criterion_01_cycle_formula() {
    let report = run(SuiteName::Cycles);
    let pass = report.passed() && report.summary.total == 55;
    line(
        1,
        "cycle formula equals search for n in [3,12], all k",
        pass,
        format!(
            "{} pairs, {} match, {} mismatch",
            report.summary.total, report.summary.matches, report.summary.mismatches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_02_tree_formula() {
    let report = run(SuiteName::Trees);
    let pass = report.passed();
    line(
        2,
        "tree formula equals search on 50 seeded random trees",
        pass,
        format!(
            "{} (tree, k) cases, {} match",
            report.summary.total, report.summary.matches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_03_figure_regression() {
    let g = subdivided_wheel(3).unwrap();
    let by_label = |names: &[&str]| -> VertexSet {
        names
            .iter()
            .map(|n| g.vertex_by_label(n).unwrap())
            .collect()
    };
    let s1 = by_label(&["v1", "v2", "v3", "w"]);
    let s2 = by_label(&["w", "x", "y", "z"]);
    let memberships_ok = is_k_sgp(&g, &s1, 2).unwrap()
        && !is_k_sgp(&g, &s1, 3).unwrap()
        && is_k_sgp(&g, &s2, 3).unwrap();
    let budget = Budget::with_max_n(16);
    let sgp2 = sgp(&g, 2, &budget).unwrap();
    let sgp3 = sgp(&g, 3, &budget).unwrap();
    let values_ok = sgp2.value == 4 && sgp3.value == 4;
    line(
        3,
        "figure regression on the subdivided wheel",
        memberships_ok && values_ok,
        format!(
            "memberships {}; sgp_2 = {} and sgp_3 = {} vs expected 4",
            memberships_ok, sgp2.value, sgp3.value
        ),
    );
    assert!(memberships_ok, "set membership claims must hold");
    // The stated maxima are not attainable: {4,6,9,11,12} is a 5-element
    // general position set of this graph (confirmed by the geodesic
    // search, the Steiner-table search, and the naive oracle), and the
    // exhaustive sweep in the library tests pins both maxima at 5.
    assert_eq!(
        (sgp2.value, sgp3.value),
        (4, 4),
        "expected maxima of 4 are exceeded; witnesses: {:?} (k=2), {:?} (k=3)",
        sgp2.witness.as_slice(),
        sgp3.witness.as_slice()
    );
}

#[test]
fn criterion_04_join_machinery() {
    let report = run(SuiteName::Joins);
    let sources: std::collections::BTreeSet<&str> =
        report.cases.iter().map(|c| c.source.as_str()).collect();
    let pass =
        report.passed() && sources.contains("join-somega") && sources.contains("join-sgp");
    line(
        4,
        "join additivity and join formula equal search on the 12-graph corpus",
        pass,
        format!(
            "{} ordered-pair cases, {} match",
            report.summary.total, report.summary.matches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_05_corollary_families() {
    let report = run(SuiteName::Corollary44);
    let sources: std::collections::BTreeSet<&str> =
        report.cases.iter().map(|c| c.source.as_str()).collect();
    let expected_sources = [
        "complete-family",
        "wheel-family",
        "fan-family",
        "complete-bipartite-family",
        "clique-join-empty-family",
    ];
    let pass = report.passed() && expected_sources.iter().all(|s| sources.contains(s));
    line(
        5,
        "all five family formulas equal search for total order <= 9",
        pass,
        format!(
            "{} tuples, {} match",
            report.summary.total, report.summary.matches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_06_path_cycle_sjc() {
    let report = run(SuiteName::Sjc);
    let pass = report.passed();
    line(
        6,
        "path/cycle join-critical formulas equal search for n <= 10",
        pass,
        format!(
            "{} cases, {} match",
            report.summary.total, report.summary.matches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_07_lexicographic() {
    let report = run(SuiteName::Lexicographic);
    let gp_cases = report
        .cases
        .iter()
        .filter(|c| c.source == "lex-gp")
        .count();
    let corollary_cases: Vec<_> = report
        .cases
        .iter()
        .filter(|c| c.descriptor.starts_with("sgp lex:cycle"))
        .collect();
    let pass = report.passed()
        && gp_cases > 0
        && corollary_cases.len() == 3
        && corollary_cases.iter().all(|c| c.verdict == Verdict::Match);
    line(
        7,
        "lexicographic gp formula equals search; 3l values confirmed",
        pass,
        format!(
            "{} gp pairs, {} corollary tuples, {} mismatch",
            gp_cases,
            corollary_cases.len(),
            report.summary.mismatches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_08_bounds_hold() {
    let lex = run(SuiteName::Lexicographic);
    let lex_bounds: Vec<_> = lex
        .cases
        .iter()
        .filter(|c| c.descriptor.starts_with("lex-bound"))
        .collect();
    let lex_ok = lex_bounds.len() == 20
        && lex_bounds
            .iter()
            .all(|c| matches!(c.verdict, Verdict::BoundHolds | Verdict::Match));

    let split = run(SuiteName::Split);
    let split_ok = split.passed() && split.summary.total == 20;

    let remark = run(SuiteName::Remark21);
    let prop = run(SuiteName::Prop22);
    let pass = lex_ok && split_ok && remark.passed() && prop.passed();
    line(
        8,
        "lex/split lower bounds hold; chain and full-order equivalence",
        pass,
        format!(
            "lex {}(20), split {}/{}, chain {}/{}, equivalence {}/{}",
            lex_bounds.len(),
            split.summary.bounds_hold,
            split.summary.total,
            remark.summary.bounds_hold,
            remark.summary.total,
            prop.summary.matches,
            prop.summary.total
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_09_grid_window() {
    let report = run(SuiteName::Grid);
    let pass = report.passed() && report.summary.total == 4;
    line(
        9,
        "grid witnesses pass at both window radii; gp of the window is 4",
        pass,
        format!(
            "{} cases, {} match",
            report.summary.total, report.summary.matches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_10_oracle_equivalence() {
    let report = run(SuiteName::SteinerOracle);
    let steiner_cases = report
        .cases
        .iter()
        .filter(|c| c.source == "steiner-oracle")
        .count();
    let sgp_cases = report
        .cases
        .iter()
        .filter(|c| c.source == "sgp-oracle")
        .count();
    let pass = report.passed() && steiner_cases == 500 && sgp_cases == 100;
    line(
        10,
        "DP vs naive Steiner oracle (500) and sgp vs naive checker (100)",
        pass,
        format!(
            "{} + {} instances, {} mismatch",
            steiner_cases, sgp_cases, report.summary.mismatches
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn criterion_11_property_suite() {
    // Hereditariness: every subset of a valid set is valid, exhaustively
    // over all 2^n subsets of connected corpus graphs with n <= 8 plus 50
    // seeded random connected graphs.
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for spec in [
        "complete:3",
        "complete:5",
        "complete:7",
        "path:4",
        "path:5",
        "path:7",
        "cycle:4",
        "cycle:5",
        "cycle:6",
        "star:4",
        "star:6",
        "wheel:7",
        "fan:6",
        "complete_bipartite:2,3",
        "complete_bipartite:3,4",
        "tree:2,2,3",
    ] {
        graphs.push((spec.to_string(), parse_graph_spec(spec).unwrap()));
    }
    let mut rng = sgp_core::rng::Xoshiro256::seeded(DEFAULT_SEED ^ 0x11);
    let mut found = 0;
    while found < 50 {
        let n = 4 + (rng.next_below(5) as usize);
        let p = 0.25 + 0.1 * rng.next_below(6) as f64;
        let seed = rng.next_u64();
        let g = random_graph(n, p, seed).unwrap();
        if !g.is_connected() {
            continue;
        }
        graphs.push((format!("random:{n},{p},{seed}"), g));
        found += 1;
    }

    let mut checked_sets = 0u64;
    for (name, g) in &graphs {
        let n = g.n();
        if n > 8 {
            continue;
        }
        for k in 2..n {
            let valid: Vec<bool> = (0..(1u64 << n))
                .map(|mask| is_k_sgp(g, &VertexSet::from_mask(mask), k).unwrap())
                .collect();
            for mask in 0..(1u64 << n) {
                if !valid[mask as usize] {
                    continue;
                }
                checked_sets += 1;
                let mut rest = mask;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    assert!(
                        valid[(mask & !(1u64 << v)) as usize],
                        "hereditariness violated on {name}, k={k}, set mask {mask:b}"
                    );
                }
            }
        }
    }

    // Table monotonicity: the steiner-oracle suite checks the full table
    // invariants on each of its 500 tables explicitly, and every table
    // built anywhere under the test profile re-checks monotonicity at
    // construction via debug assertions.
    let report = run(SuiteName::SteinerOracle);
    let pass = report.passed();
    line(
        11,
        "hereditariness exhaustive on n <= 8; table monotonicity everywhere",
        pass,
        format!(
            "{} valid sets closed downward; {} tables invariant-checked",
            checked_sets, report.summary.total
        ),
    );
    assert!(pass, "{:#?}", report.summary);
}

#[test]
fn monotonicity_probe_collects_data() {
    // Empirical probe only, nothing exact to hold it to: the suite must
    // complete and report any decreases it sees.
    let report = run(SuiteName::Monotonicity);
    assert!(report.passed());
    assert!(report.summary.total > 0);
}
