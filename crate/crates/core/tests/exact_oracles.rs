mod common;

use common::{
    brute_force_apsp, is_simple, negative_cycle_graph, nonnegative_graph, potential_graph, rng,
};
use proptest::prelude::*;
use quasiroute::exact::bellman_ford_passes;
use quasiroute::{
    bellman_ford, dijkstra, floyd_warshall, johnson, modified_floyd_warshall, Error, Graph,
};

fn assert_matches_oracle(g: &Graph, seed: u64) {
    let oracle = brute_force_apsp(g);
    let fw = floyd_warshall(g).unwrap();
    let jo = johnson(g).unwrap();
    for (s, row) in oracle.iter().enumerate() {
        let bf = bellman_ford(g, s).unwrap();
        for (t, &want) in row.iter().enumerate() {
            assert_eq!(fw.dist.get(s, t), want, "fw seed {seed} {s}->{t}");
            assert_eq!(jo.dist.get(s, t), want, "johnson seed {seed} {s}->{t}");
            assert_eq!(bf.dist[t], want, "bellman-ford seed {seed} {s}->{t}");
        }
    }
}

#[test]
fn exact_algorithms_match_enumeration_with_negative_edges() {
    for seed in 0..60 {
        let mut r = rng(seed);
        let n = 1 + (seed as usize % 12);
        let g = potential_graph(&mut r, n, 0.35, -3, 10);
        assert_matches_oracle(&g, seed);
    }
}

#[test]
fn dijkstra_matches_enumeration_without_negative_edges() {
    for seed in 0..60 {
        let mut r = rng(1000 + seed);
        let n = 1 + (seed as usize % 12);
        let g = nonnegative_graph(&mut r, n, 0.35, 10);
        let oracle = brute_force_apsp(&g);
        for (s, row) in oracle.iter().enumerate() {
            assert_eq!(
                &dijkstra(&g, s).unwrap().dist,
                row,
                "seed {seed} source {s}"
            );
        }
        assert_matches_oracle(&g, seed);
    }
}

#[test]
fn reconstructed_paths_are_simple_and_cost_the_distance() {
    for seed in 0..40 {
        let mut r = rng(2000 + seed);
        let g = potential_graph(&mut r, 10, 0.3, -3, 10);
        let fw = floyd_warshall(&g).unwrap();
        let jo = johnson(&g).unwrap();
        for (i, j, path) in fw.all_paths() {
            let d = fw.dist.get(i, j);
            match path {
                None => assert_eq!(d, f64::INFINITY),
                Some(p) => {
                    assert!(is_simple(&p), "{p:?}");
                    assert_eq!(g.path_cost(&p), Some(d), "fw {i}->{j} {p:?}");
                }
            }
            if let Ok(p) = jo.path(i, j) {
                assert_eq!(g.path_cost(&p), Some(d), "johnson {i}->{j} {p:?}");
            }
        }
        for s in 0..10 {
            let bf = bellman_ford(&g, s).unwrap();
            for t in (0..10).filter(|&t| bf.dist[t] < f64::INFINITY) {
                let p = bf.path_to(t).unwrap();
                assert_eq!(g.path_cost(&p), Some(bf.dist[t]));
            }
        }
    }
}

#[test]
fn negative_cycles_are_flagged_by_every_detector() {
    for seed in 0..30 {
        let mut r = rng(3000 + seed);
        let n = 2 + (seed as usize % 10);
        let g = negative_cycle_graph(&mut r, n);
        assert!(
            matches!(floyd_warshall(&g), Err(Error::NegativeCycle)),
            "seed {seed}"
        );
        assert!(
            matches!(modified_floyd_warshall(&g), Err(Error::NegativeCycle)),
            "seed {seed}"
        );
        assert!(
            matches!(johnson(&g), Err(Error::NegativeCycle)),
            "seed {seed}"
        );
        assert!(
            matches!(bellman_ford(&g, 0), Err(Error::NegativeCycle)),
            "seed {seed}"
        );
    }
}

#[test]
fn johnson_handles_dense_negative_edges() {
    let (mut negative, mut total) = (0, 0);
    for seed in 0..20 {
        let mut r = rng(4000 + seed);
        let g = potential_graph(&mut r, 12, 0.5, -10, 4);
        negative += g.edges().iter().filter(|e| e.w < 0.0).count();
        total += g.edge_count();
        assert_eq!(johnson(&g).unwrap().dist, floyd_warshall(&g).unwrap().dist);
    }
    assert!(negative * 5 >= total, "{negative} of {total} arcs negative");
}

#[test]
fn modified_floyd_warshall_preserves_answers() {
    for seed in 0..200 {
        let mut r = rng(5000 + seed);
        let n = 1 + (seed as usize % 15);
        let g = potential_graph(&mut r, n, 0.25, -3, 10);
        let m = modified_floyd_warshall(&g).unwrap();
        let p = floyd_warshall(&g).unwrap();
        assert_eq!(m.dist, p.dist, "seed {seed}");
        assert!(m.report.relaxation_count <= p.report.relaxation_count);
    }
}

fn seeded_graph() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1usize..=12, 0.05f64..0.6)
        .prop_map(|(seed, n, density)| potential_graph(&mut rng(seed), n, density, -3, 10))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_are_a_relaxation_fixpoint(g in seeded_graph()) {
        let fw = floyd_warshall(&g).unwrap();
        for s in 0..g.vertex_count() {
            prop_assert_eq!(fw.dist.get(s, s), 0.0);
            for (u, v, w) in g.arcs() {
                prop_assert!(fw.dist.get(s, v) <= fw.dist.get(s, u) + w);
            }
        }
    }

    #[test]
    fn four_way_agreement(g in seeded_graph()) {
        let fw = floyd_warshall(&g).unwrap();
        prop_assert_eq!(&johnson(&g).unwrap().dist, &fw.dist);
        prop_assert_eq!(&modified_floyd_warshall(&g).unwrap().dist, &fw.dist);
        for s in 0..g.vertex_count() {
            let bf = bellman_ford(&g, s).unwrap();
            prop_assert_eq!(bf.dist.as_slice(), fw.dist.row(s));
        }
    }

    #[test]
    fn bellman_ford_needs_at_most_n_passes(g in seeded_graph()) {
        // at most n - 1 relaxation passes plus the detection pass
        prop_assert!(bellman_ford_passes(&g, 0).unwrap() <= g.vertex_count());
    }
}
