use berge_core::bounds::{cited_bound, CitedParams, LogBase};
use berge_core::canon::canonical_label;
use berge_core::detect::{contains_berge, count_cliques, edge_heaviness, find_cycle, find_embedding, find_path, is_linear};
use berge_core::graph::turan_graph;
use berge_core::hypergraph::all_r_sets;
use berge_core::matching::{
    adjust_matching, cel2_partition, has_augmenting_path, heavy_constrained_matching, maximum_matching, BipartiteIncidence,
    Cel2Violation,
};
use berge_core::reduction::{check_claim, pipeline_certificate, random_halving, survivor_graph, HalvingMode};
use berge_core::search::random_maximal_berge_free;
use berge_core::symmetrize::{symmetrize_to_optimum, turan_clique_count};
use berge_core::{Color, FamilySpec, Graph, Hypergraph, RedBlueGraph};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |es| Graph::from_edges(n, es).unwrap())
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn arb_hypergraph(n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    let sets = all_r_sets(n, 3);
    let total = sets.len();
    subsequence((0..total).collect::<Vec<_>>(), 0..=max_edges.min(total)).prop_map(move |ids| {
        let edges: Vec<Vec<usize>> = ids
            .iter()
            .map(|&i| (0..n).filter(|&v| sets[i] >> v & 1 == 1).collect())
            .collect();
        Hypergraph::from_edges(3, n, edges).unwrap()
    })
}

fn arb_bipartite() -> impl Strategy<Value = (usize, usize, Vec<(usize, usize)>)> {
    (1usize..=20, 1usize..=20).prop_flat_map(|(a, b)| {
        let all: Vec<(usize, usize)> = (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).collect();
        let len = all.len();
        (Just(a), Just(b), subsequence(all, 0..=len.min(60)))
    })
}

fn arb_redblue(max_n: usize) -> impl Strategy<Value = RedBlueGraph> {
    arb_graph(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), proptest::collection::vec(any::<bool>(), m)).prop_map(|(g, colours)| {
            let mut rbg = RedBlueGraph::empty(g.n());
            for (p, red) in g.edges().zip(colours) {
                rbg.set(p.lo, p.hi, Some(if red { Color::Red } else { Color::Blue }));
            }
            rbg
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_label_ignores_relabelling((g, perm) in arb_graph_with_perm(8)) {
        prop_assert_eq!(canonical_label(&g).unwrap(), canonical_label(&g.permute(&perm)).unwrap());
    }

    #[test]
    fn two_cliques_are_edges(g in arb_graph(10)) {
        prop_assert_eq!(count_cliques(&g, 2), g.edge_count() as u64);
    }

    #[test]
    fn cycle_and_path_finders_agree_with_embedder(g in arb_graph(9), m in 3usize..=6) {
        prop_assert_eq!(find_cycle(&g, m).is_some(), find_embedding(&g, &Graph::cycle(m)).is_some());
        prop_assert_eq!(find_path(&g, m).is_some(), find_embedding(&g, &Graph::path(m)).is_some());
    }

    #[test]
    fn linear_iff_pairs_light(h in arb_hypergraph(7, 12)) {
        let heaviest = (0..7)
            .flat_map(|u| (u + 1..7).map(move |v| (u, v)))
            .map(|(u, v)| edge_heaviness(&h, u, v).unwrap())
            .max()
            .unwrap_or(0);
        prop_assert_eq!(is_linear(&h), heaviest <= 1);
    }

    #[test]
    fn berge_witnesses_validate(h in arb_hypergraph(6, 8), name in prop::sample::select(vec!["K3", "C4", "C5", "P4"])) {
        let f: FamilySpec = name.parse().unwrap();
        if let Some(w) = contains_berge(&h, &f) {
            prop_assert!(w.validate(&h, &f.graph()));
        }
    }

    #[test]
    fn turan_edge_count_matches_graph((n, parts) in (1usize..=12).prop_flat_map(|n| (Just(n), 1..=n.min(6)))) {
        let g = turan_graph(n, parts).unwrap();
        prop_assert_eq!(turan_clique_count(n, parts, 2), g.edge_count() as u128);
        prop_assert_eq!(turan_clique_count(n, parts, 3), count_cliques(&g, 3) as u128);
        prop_assert_eq!(count_cliques(&g, parts + 1), 0);
    }

    #[test]
    fn maximum_matching_is_maximum_and_label_free((a, b, edges) in arb_bipartite(), rot in 0usize..20) {
        let g = BipartiteIncidence::from_adjacency(a, b, edges.iter().copied()).unwrap();
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        prop_assert!(!has_augmenting_path(&g, &m));
        let relabelled = BipartiteIncidence::from_adjacency(
            a,
            b,
            edges.iter().map(|&(x, y)| ((x + rot) % a, (y + rot) % b)),
        )
        .unwrap();
        prop_assert_eq!(maximum_matching(&relabelled).size(), m.size());
    }

    #[test]
    fn partition_keeps_p1_p2_p4_and_sizes((a, b, edges) in arb_bipartite()) {
        let g = BipartiteIncidence::from_adjacency(a, b, edges).unwrap();
        let m = maximum_matching(&g);
        let part = cel2_partition(&g, &m).unwrap();
        let other: Vec<_> = part
            .violations(&g, &m)
            .into_iter()
            .filter(|v| !matches!(v, Cel2Violation::P3 { .. }))
            .collect();
        prop_assert!(other.is_empty(), "{other:?}");
        prop_assert_eq!(part.a1.len(), part.b1.len());
        prop_assert_eq!(part.b2.len(), part.a3(&m).len());
        prop_assert_eq!(part.p3_exceptions.is_empty(), part.violations(&g, &m).is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_counts_and_claim(seed in any::<u64>(), n in 6usize..=8, long in any::<bool>(), paired in any::<bool>()) {
        let f: FamilySpec = if long { "C7" } else { "C5" }.parse().unwrap();
        let f0: FamilySpec = if long { "C6" } else { "C4" }.parse().unwrap();
        let h = random_maximal_berge_free(n, 3, &f, seed).unwrap();
        let cert = pipeline_certificate(&h, &f, 3).unwrap();
        let c = cert.counts;
        prop_assert_eq!(c.h, c.h1 + c.h2);
        prop_assert_eq!(c.h2, c.a1 + c.a2);
        prop_assert!(c.a2 as u64 <= c.blue_cliques);
        prop_assert!(is_linear(&cert.split.h1));

        let m0 = heavy_constrained_matching(&cert.gamma, &cert.split.h2).unwrap();
        let adjusted = adjust_matching(&cert.gamma, &m0, &cert.split.h1).unwrap();
        prop_assert_eq!(m0.size(), maximum_matching(&cert.gamma).size());
        prop_assert_eq!(adjusted.size(), m0.size());

        let mode = if paired { HalvingMode::Paired } else { HalvingMode::Independent };
        let h = if paired && n % 2 == 1 { h.with_vertex_count(n + 1).unwrap() } else { h };
        let cert = pipeline_certificate(&h, &f, 3).unwrap();
        let halving = survivor_graph(&cert, &random_halving(h.n(), mode, seed.rotate_left(7)).unwrap()).unwrap();
        prop_assert_eq!(halving.v1 & halving.v2, 0);
        let gp = halving.g_prime.as_ref().unwrap();
        prop_assert!(gp.edges().all(|p| (halving.v1 >> p.lo & 1) == (halving.v1 >> p.hi & 1)));
        prop_assert!(check_claim(&halving, &f0).unwrap());
    }

    #[test]
    fn symmetrization_never_lowers_g(rbg in arb_redblue(6)) {
        let (k, r) = (5, 3);
        prop_assume!(count_cliques(&rbg.graph(), k) == 0 && count_cliques(rbg.red(), r) == 0);
        let (out, trace) = symmetrize_to_optimum(&rbg, k, r).unwrap();
        prop_assert!(trace.g_r_values.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(trace.g_r_values.first().is_none_or(|&g| g >= trace.initial_g_r));
        prop_assert_eq!(out.n(), rbg.n());
        prop_assert_eq!(count_cliques(&out.graph(), k), 0);
        prop_assert_eq!(count_cliques(out.red(), r), 0);
    }

    #[test]
    fn cited_bounds_grow_with_n(n in 10usize..100_000, k in 2usize..8, two in any::<bool>()) {
        let log_base = if two { LogBase::Two } else { LogBase::Natural };
        for name in ["bukh_jiang", "furedi_ozkahya_lin", "furedi_ozkahya_odd", "alon_shikhelman_odd", "gyori_li", "bollobas_gyori"] {
            let at = |n| cited_bound(name, &CitedParams { n, k, r: 3, log_base }).unwrap().value;
            prop_assert!(at(n) <= at(n + 1), "{name} at n = {n}");
        }
    }
}
