//! Randomized structural invariants. Everything here is cheap enough to run
//! hundreds of generated instances per invocation.

use proptest::prelude::*;
use sgp_core::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..10, 0u32..=1000, any::<u64>())
        .prop_map(|(n, p_milli, seed)| random_graph(n, f64::from(p_milli) / 1000.0, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trips(g in arb_graph()) {
        let text = g.to_edge_list();
        let back = Graph::parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn join_counts(g in arb_graph(), h in arb_graph()) {
        let j = join(&g, &h);
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.m(), g.m() + h.m() + g.n() * h.n());
    }

    #[test]
    fn lexicographic_by_k2_is_double_join(g in arb_graph()) {
        let k2 = parse_graph_spec("complete:2").unwrap();
        let lex = lexicographic(&k2, &g);
        let jj = join(&g, &g);
        prop_assert_eq!(lex.edges(), jj.edges());
    }

    #[test]
    fn steiner_tables_stay_monotone(g in arb_graph(), picks in proptest::collection::vec(0usize..100, 2..5)) {
        let terminals: VertexSet = picks.iter().map(|&p| (p % g.n()) as u32).collect();
        if !terminals.is_empty() {
            let table = steiner_table(&g, &terminals).unwrap();
            prop_assert!(table.check_invariants(&g).is_ok());
        }
    }

    #[test]
    fn two_terminal_steiner_is_bfs(g in arb_graph(), a in 0u32..10, b in 0u32..10) {
        let (a, b) = (a % g.n() as u32, b % g.n() as u32);
        if a != b {
            let w: VertexSet = [a, b].into_iter().collect();
            let d = steiner_distance(&g, &w).unwrap();
            prop_assert_eq!(d, g.bfs_distances(a)[b as usize]);
        }
    }

    #[test]
    fn witnesses_pass_their_predicates(g in arb_graph(), k in 2usize..5) {
        let budget = Budget::with_max_n(16);
        let r = sgp(&g, k, &budget).unwrap();
        prop_assert!(is_k_sgp(&g, &r.witness, k).unwrap());
        prop_assert_eq!(r.witness.len(), r.value);
        let s = somega(&g, k).unwrap();
        prop_assert!(is_k_steiner_clique(&g, &s.witness, k).unwrap());
        let j = sjc(&g, k).unwrap();
        prop_assert!(is_steiner_join_critical(&g, &j.witness, k).unwrap());
    }

    #[test]
    fn remark_chain_on_connected_instances(g in arb_graph(), k in 2usize..5) {
        if g.is_connected() && k < g.n() {
            let budget = Budget::with_max_n(16);
            let omega = clique_number(&g).unwrap();
            let sw = somega(&g, k).unwrap().value;
            let sg = sgp(&g, k, &budget).unwrap().value;
            prop_assert!(k.max(omega) <= sw);
            prop_assert!(sw <= sg);
            prop_assert!(sg <= g.n());
        }
    }
}
