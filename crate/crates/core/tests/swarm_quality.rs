mod common;

use common::{brute_force_pair, is_simple, rng};
use quasiroute::{
    aco_shortest_path, build_complete_graph, build_knn_graph, floyd_warshall, generate_points,
    gwo_minimize, pso_minimize, run_hybrid, AcoParams, Boundary, Edge, Graph, HybridParams,
    SwarmMinParams, Variant, Visibility,
};
use rand::Rng;

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// Connected undirected graph on 8 vertices: a random spanning tree plus extra edges.
fn sparse_graph(seed: u64) -> Graph {
    let mut r = rng(seed);
    let n = 8;
    let mut edges = Vec::new();
    for v in 1..n {
        let u = r.gen_range(0..v);
        edges.push(Edge::new(u, v, r.gen_range(1..=20) as f64));
    }
    for _ in 0..5 {
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        if u != v {
            edges.push(Edge::new(u, v, r.gen_range(1..=20) as f64));
        }
    }
    Graph::undirected(n, edges).unwrap()
}

#[test]
fn aco_finds_optimum_on_complete_fields() {
    let mut hits = 0;
    for seed in 0..100 {
        let f = generate_points(10, Boundary::default(), seed).unwrap();
        let g = build_complete_graph(&f).unwrap();
        let fw = floyd_warshall(&g).unwrap();
        let r = aco_shortest_path(
            &g,
            0,
            9,
            Visibility::DistanceToGo(&fw.dist),
            &AcoParams::with_seed(seed),
        )
        .unwrap();
        assert!(r.iterations_used <= 200);
        hits += (r.cost == fw.dist.get(0, 9)) as usize;
    }
    assert!(hits >= 95, "{hits}/100");
}

#[test]
fn aco_near_optimum_on_sparse_graphs() {
    let mut hits = 0;
    for seed in 0..100 {
        let g = sparse_graph(seed);
        let best = brute_force_pair(&g, 0, 7);
        let fw = floyd_warshall(&g).unwrap();
        let r = aco_shortest_path(
            &g,
            0,
            7,
            Visibility::DistanceToGo(&fw.dist),
            &AcoParams::with_seed(seed),
        )
        .unwrap();
        assert!(is_simple(&r.path));
        assert_eq!(g.path_cost(&r.path), Some(r.cost));
        hits += (r.cost <= 1.05 * best) as usize;
    }
    assert!(hits >= 95, "{hits}/100");
}

#[test]
fn aco_never_beats_the_exact_distance() {
    for seed in 0..50 {
        let f = generate_points(12, Boundary::default(), seed).unwrap();
        let g = build_knn_graph(&f, 3).unwrap();
        let fw = floyd_warshall(&g).unwrap();
        let (src, dst) = (0, 11);
        if fw.dist.get(src, dst) == f64::INFINITY {
            continue;
        }
        for vis in [
            Visibility::InverseEdgeWeight,
            Visibility::Distances(&fw.dist),
        ] {
            let r = aco_shortest_path(&g, src, dst, vis, &AcoParams::with_seed(seed)).unwrap();
            assert!(r.cost >= fw.dist.get(src, dst), "seed {seed}");
            assert!(r.best_cost_history.windows(2).all(|w| w[1] <= w[0]));
        }
    }
}

#[test]
fn hybrid_route_is_bounded_by_its_distance_matrix() {
    for seed in 0..30 {
        let f = generate_points(10, Boundary::default(), seed).unwrap();
        for variant in Variant::ALL {
            let mut p = HybridParams::new(variant);
            p.aco.seed = seed;
            let r = run_hybrid(&f, 0, 9, &p).unwrap();
            assert!(is_simple(&r.route.path));
            assert!(r.route.cost >= r.all_pairs.dist.get(0, 9));
        }
    }
}

#[test]
fn particle_swarm_minimizes_sphere() {
    let mut hits = 0;
    for seed in 0..100 {
        let p = SwarmMinParams::new(20, 500, vec![(-5.0, 5.0); 2], seed);
        let r = pso_minimize(sphere, &p).unwrap();
        assert!(r.history.windows(2).all(|w| w[1] <= w[0]));
        hits += (r.best_value <= 1e-3) as usize;
    }
    assert!(hits >= 90, "{hits}/100");
}

#[test]
fn grey_wolves_minimize_sphere() {
    let mut hits = 0;
    for seed in 0..100 {
        let p = SwarmMinParams::new(20, 500, vec![(-5.0, 5.0); 2], seed);
        let r = gwo_minimize(sphere, &p).unwrap();
        assert!(r.history.windows(2).all(|w| w[1] <= w[0]));
        hits += (r.best_value <= 1e-3) as usize;
    }
    assert!(hits >= 90, "{hits}/100");
}
