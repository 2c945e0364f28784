//! Random graph families and a brute-force shortest-path oracle shared by the
//! integration tests.
#![allow(dead_code)]

use quasiroute::{Edge, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Directed graph with integer weights in `[lo, hi]` that has no negative
/// cycle: every weight is `base + h(u) - h(v)` with `base >= 0`, so any cycle
/// costs the sum of its non-negative bases.
pub fn potential_graph(rng: &mut ChaCha8Rng, n: usize, density: f64, lo: i64, hi: i64) -> Graph {
    let h: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=lo.abs())).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            if !rng.gen_bool(density) {
                continue;
            }
            let shift = h[u] - h[v];
            let base_lo = (lo - shift).max(0);
            let base_hi = hi - shift;
            if base_lo > base_hi {
                continue;
            }
            let w = rng.gen_range(base_lo..=base_hi) + shift;
            edges.push(Edge::new(u, v, w as f64));
        }
    }
    Graph::directed(n, edges).unwrap()
}

/// Directed graph with integer weights in `[0, hi]`.
pub fn nonnegative_graph(rng: &mut ChaCha8Rng, n: usize, density: f64, hi: i64) -> Graph {
    random_graph_with(rng, n, density, |r| r.gen_range(0..=hi) as f64)
}

fn random_graph_with(
    rng: &mut ChaCha8Rng,
    n: usize,
    density: f64,
    mut weight: impl FnMut(&mut ChaCha8Rng) -> f64,
) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            if rng.gen_bool(density) {
                let w = weight(rng);
                edges.push(Edge::new(u, v, w));
            }
        }
    }
    Graph::directed(n, edges).unwrap()
}

/// A negative-cycle-free graph with a planted cycle of total weight `-1` or
/// less through 2..=n vertices, reachable from vertex 0.
pub fn negative_cycle_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let g = potential_graph(rng, n, 0.3, -3, 10);
    let len = rng.gen_range(2..=n);
    let mut cycle: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        cycle.swap(i, rng.gen_range(0..=i));
    }
    cycle.truncate(len);
    let mut edges = g.edges().to_vec();
    // Every planted arc costs at most 0 and the closing arc at most -1.
    for i in 0..len {
        let (u, v) = (cycle[i], cycle[(i + 1) % len]);
        let w = if i + 1 == len {
            rng.gen_range(-3..=-1)
        } else {
            rng.gen_range(-3..=0)
        };
        edges.push(Edge::new(u, v, w as f64));
    }
    if cycle[0] != 0 {
        edges.push(Edge::new(0, cycle[0], rng.gen_range(0..=10) as f64));
    }
    Graph::directed(n, edges).unwrap()
}

/// Shortest walk costs by enumerating every simple path from every source.
/// Exact whenever the graph has no negative cycle.
pub fn brute_force_apsp(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut best = vec![vec![f64::INFINITY; n]; n];
    let mut on_path = vec![false; n];
    fn walk(
        adj: &[Vec<(usize, f64)>],
        u: usize,
        cost: f64,
        on_path: &mut [bool],
        best: &mut [f64],
    ) {
        if cost < best[u] {
            best[u] = cost;
        }
        on_path[u] = true;
        for &(v, w) in &adj[u] {
            if !on_path[v] {
                walk(adj, v, cost + w, on_path, best);
            }
        }
        on_path[u] = false;
    }
    for (s, row) in best.iter_mut().enumerate() {
        walk(&adj, s, 0.0, &mut on_path, row);
    }
    best
}

/// Cheapest simple `src -> dst` path cost by enumeration.
pub fn brute_force_pair(g: &Graph, src: usize, dst: usize) -> f64 {
    brute_force_apsp(g)[src][dst]
}

pub fn is_simple(path: &[usize]) -> bool {
    let mut seen = path.to_vec();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}
