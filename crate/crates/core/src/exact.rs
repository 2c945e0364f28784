//! Exact shortest paths: Dijkstra, Bellman-Ford, Floyd-Warshall and Johnson.
//!
//! Every routine reports the number of relaxation checks it performed, i.e.
//! how many times it evaluated `d[u] + w(u, v) < d[v]`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{reconstruct_path, DistanceMatrix, Graph, NextHopMatrix, ENTRY_BYTES};
use crate::metrics::{ComplexityReport, Instrumented};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingleSourceResult {
    pub source: usize,
    pub dist: Vec<f64>,
    pub pred: Vec<Option<usize>>,
    pub report: ComplexityReport,
}

impl SingleSourceResult {
    /// Vertex sequence `source -> target` following the predecessor chain.
    pub fn path_to(&self, target: usize) -> Result<Vec<usize>> {
        let n = self.dist.len();
        if target >= n {
            return Err(Error::VertexOutOfRange { vertex: target, n });
        }
        if self.dist[target] == f64::INFINITY {
            return Err(Error::Unreachable {
                from: self.source,
                to: target,
            });
        }
        let mut path = vec![target];
        let mut cur = target;
        while let Some(p) = self.pred[cur] {
            path.push(p);
            cur = p;
            if path.len() > n {
                return Err(Error::NegativeCycle);
            }
        }
        path.reverse();
        Ok(path)
    }
}

impl Instrumented for SingleSourceResult {
    fn report(&self) -> &ComplexityReport {
        &self.report
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AllPairsResult {
    pub dist: DistanceMatrix,
    pub next: NextHopMatrix,
    pub report: ComplexityReport,
}

impl AllPairsResult {
    pub fn path(&self, i: usize, j: usize) -> Result<Vec<usize>> {
        reconstruct_path(&self.next, i, j)
    }

    /// Stacks one single-source run per vertex, ordered by source, into an
    /// all-pairs result. Counters and storage are summed over the runs.
    pub fn from_single_source(runs: &[SingleSourceResult]) -> Result<Self> {
        let n = runs.len();
        let mut dist = DistanceMatrix::filled(n, f64::INFINITY);
        let mut next = NextHopMatrix::empty(n);
        let mut report = ComplexityReport::default();
        for (src, run) in runs.iter().enumerate() {
            if run.source != src || run.dist.len() != n || run.pred.len() != n {
                return Err(Error::param(format!(
                    "run {src} is not a single-source result over {n} vertices from {src}"
                )));
            }
            let hops = first_hops(src, &run.pred);
            for (v, (&d, &hop)) in run.dist.iter().zip(&hops).enumerate() {
                if d < f64::INFINITY {
                    dist.set(src, v, d);
                    next.set(src, v, hop);
                }
            }
            report.absorb(&run.report);
        }
        Ok(AllPairsResult { dist, next, report })
    }

    /// Reconstructs every ordered pair `i != j`; unreachable pairs get `None`.
    pub fn all_paths(&self) -> Vec<(usize, usize, Option<Vec<usize>>)> {
        let n = self.dist.size();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1));
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                out.push((i, j, self.path(i, j).ok()));
            }
        }
        out
    }
}

impl Instrumented for AllPairsResult {
    fn report(&self) -> &ComplexityReport {
        &self.report
    }
}

/// Min-heap entry: smallest distance first, then lowest vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Frontier {
    dist: f64,
    vertex: usize,
}

impl Eq for Frontier {}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct DijkstraRun {
    dist: Vec<f64>,
    pred: Vec<Option<usize>>,
    relaxations: u64,
    peak_heap: usize,
}

/// Binary-heap Dijkstra with lazy deletion over non-negative adjacency lists.
fn dijkstra_adj(adj: &[Vec<(usize, f64)>], src: usize) -> DijkstraRun {
    let n = adj.len();
    let mut dist = vec![f64::INFINITY; n];
    let mut pred = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    let mut relaxations = 0u64;
    let mut peak_heap = 1;
    dist[src] = 0.0;
    heap.push(Frontier {
        dist: 0.0,
        vertex: src,
    });
    while let Some(Frontier { dist: d, vertex: u }) = heap.pop() {
        if settled[u] || d > dist[u] {
            continue;
        }
        settled[u] = true;
        for &(v, w) in &adj[u] {
            relaxations += 1;
            if settled[v] {
                continue;
            }
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                pred[v] = Some(u);
                heap.push(Frontier {
                    dist: nd,
                    vertex: v,
                });
                peak_heap = peak_heap.max(heap.len());
            } else if nd == dist[v] && pred[v].is_some_and(|p| u < p) {
                pred[v] = Some(u);
            }
        }
    }
    DijkstraRun {
        dist,
        pred,
        relaxations,
        peak_heap,
    }
}

fn dijkstra_storage(n: usize, peak_heap: usize) -> u64 {
    // dist + pred + settled, heap entries are (f64, usize) pairs.
    ((3 * n + 2 * peak_heap) * ENTRY_BYTES) as u64
}

/// Single-source shortest paths on a graph with non-negative weights.
pub fn dijkstra(g: &Graph, src: usize) -> Result<SingleSourceResult> {
    g.check_vertex(src)?;
    if let Some(e) = g.has_negative_weight() {
        return Err(Error::NegativeWeight {
            u: e.u,
            v: e.v,
            w: e.w,
        });
    }
    let run = dijkstra_adj(&g.adjacency(), src);
    let mut report = ComplexityReport::new("dijkstra");
    report.relaxation_count = run.relaxations;
    report.storage_bytes = dijkstra_storage(g.vertex_count(), run.peak_heap);
    Ok(SingleSourceResult {
        source: src,
        dist: run.dist,
        pred: run.pred,
        report,
    })
}

struct BellmanFordRun {
    dist: Vec<f64>,
    pred: Vec<Option<usize>>,
    relaxations: u64,
    passes: usize,
}

/// Relaxes `arcs` until a pass changes nothing (at most `n - 1` passes), then
/// runs one detection pass.
fn bellman_ford_arcs(n: usize, arcs: &[(usize, usize, f64)], src: usize) -> Result<BellmanFordRun> {
    let mut dist = vec![f64::INFINITY; n];
    let mut pred = vec![None; n];
    let mut relaxations = 0u64;
    let mut passes = 0;
    dist[src] = 0.0;
    for _ in 1..n {
        passes += 1;
        let mut changed = false;
        for &(u, v, w) in arcs {
            relaxations += 1;
            let nd = dist[u] + w;
            if nd < dist[v] {
                dist[v] = nd;
                pred[v] = Some(u);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    passes += 1;
    for &(u, v, w) in arcs {
        relaxations += 1;
        if dist[u] + w < dist[v] {
            return Err(Error::NegativeCycle);
        }
    }
    Ok(BellmanFordRun {
        dist,
        pred,
        relaxations,
        passes,
    })
}

fn sorted_arcs(g: &Graph) -> Vec<(usize, usize, f64)> {
    let mut arcs: Vec<_> = g.arcs().collect();
    arcs.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(a.2.total_cmp(&b.2)));
    arcs
}

/// Single-source shortest paths allowing negative weights.
///
/// Fails with [`Error::NegativeCycle`] when a negative cycle is reachable from
/// `src`. The report's storage covers `dist` and `pred`.
pub fn bellman_ford(g: &Graph, src: usize) -> Result<SingleSourceResult> {
    g.check_vertex(src)?;
    let run = bellman_ford_arcs(g.vertex_count(), &sorted_arcs(g), src)?;
    let mut report = ComplexityReport::new("bellman_ford");
    report.relaxation_count = run.relaxations;
    report.storage_bytes = (2 * g.vertex_count() * ENTRY_BYTES) as u64;
    Ok(SingleSourceResult {
        source: src,
        dist: run.dist,
        pred: run.pred,
        report,
    })
}

/// Number of passes Bellman-Ford made from `src`, including the detection pass.
pub fn bellman_ford_passes(g: &Graph, src: usize) -> Result<usize> {
    g.check_vertex(src)?;
    Ok(bellman_ford_arcs(g.vertex_count(), &sorted_arcs(g), src)?.passes)
}

/// Direct-arc initialization shared by both Floyd-Warshall variants.
pub(crate) fn init_all_pairs(g: &Graph) -> (DistanceMatrix, NextHopMatrix) {
    let n = g.vertex_count();
    let mut dist = DistanceMatrix::filled(n, f64::INFINITY);
    let mut next = NextHopMatrix::empty(n);
    for (u, v, w) in g.arcs() {
        if w < dist.get(u, v) {
            dist.set(u, v, w);
            next.set(u, v, Some(v));
        }
    }
    for i in 0..n {
        if dist.get(i, i) > 0.0 {
            dist.set(i, i, 0.0);
        }
        next.set(i, i, Some(i));
    }
    (dist, next)
}

pub(crate) fn check_diagonal(dist: &DistanceMatrix) -> Result<()> {
    if (0..dist.size()).any(|i| dist.get(i, i) < 0.0) {
        Err(Error::NegativeCycle)
    } else {
        Ok(())
    }
}

pub(crate) fn all_pairs_storage(n: usize) -> u64 {
    (2 * n * n * ENTRY_BYTES) as u64
}

/// Row `i` (mutable) and row `k` of a flat `n x n` matrix, `i != k`.
#[inline]
pub(crate) fn row_pair(d: &mut [f64], n: usize, i: usize, k: usize) -> (&mut [f64], &[f64]) {
    debug_assert_ne!(i, k);
    if i < k {
        let (head, tail) = d.split_at_mut(k * n);
        (&mut head[i * n..(i + 1) * n], &tail[..n])
    } else {
        let (head, tail) = d.split_at_mut(i * n);
        (&mut tail[..n], &head[k * n..(k + 1) * n])
    }
}

#[inline]
pub(crate) fn relax_row(
    dik: f64,
    hop: usize,
    row_i: &mut [f64],
    row_k: &[f64],
    next_i: &mut [usize],
) {
    for ((dij, nij), &dkj) in row_i.iter_mut().zip(next_i.iter_mut()).zip(row_k) {
        let via = dik + dkj;
        if via < *dij {
            *dij = via;
            *nij = hop;
        }
    }
}

/// All-pairs shortest paths with next-hop reconstruction.
///
/// Performs exactly `n^3` relaxation checks. Intermediates are tried in
/// ascending order and only strict improvements are taken, so among equal-cost
/// routes the one through the lowest intermediate is kept.
pub fn floyd_warshall(g: &Graph) -> Result<AllPairsResult> {
    let n = g.vertex_count();
    let (mut dist, mut next) = init_all_pairs(g);
    let mut checks = 0u64;
    {
        let d = dist.as_mut_slice();
        let nx = next.raw_mut();
        for k in 0..n {
            for i in 0..n {
                let dik = d[i * n + k];
                let hop = nx[i * n + k];
                let next_i = &mut nx[i * n..(i + 1) * n];
                if i == k {
                    // Each entry of the pivot row only reads itself.
                    let row = &mut d[k * n..(k + 1) * n];
                    for (dkj, nkj) in row.iter_mut().zip(next_i.iter_mut()) {
                        let via = dik + *dkj;
                        if via < *dkj {
                            *dkj = via;
                            *nkj = hop;
                        }
                    }
                } else {
                    let (row_i, row_k) = row_pair(d, n, i, k);
                    relax_row(dik, hop, row_i, row_k, next_i);
                }
                checks += n as u64;
            }
        }
    }
    check_diagonal(&dist)?;
    let report = ComplexityReport {
        label: "floyd_warshall".into(),
        relaxation_count: checks,
        storage_bytes: all_pairs_storage(n),
        ..Default::default()
    };
    Ok(AllPairsResult { dist, next, report })
}

/// Vertex potentials from a virtual source joined to every vertex by a zero arc.
pub fn johnson_potentials(g: &Graph) -> Result<Vec<f64>> {
    Ok(johnson_potentials_run(g)?.0)
}

fn johnson_potentials_run(g: &Graph) -> Result<(Vec<f64>, u64)> {
    let n = g.vertex_count();
    let mut arcs = sorted_arcs(g);
    arcs.extend((0..n).map(|v| (n, v, 0.0)));
    let run = bellman_ford_arcs(n + 1, &arcs, n)?;
    let mut h = run.dist;
    h.truncate(n);
    Ok((h, run.relaxations))
}

/// First hop on the tree path `src -> v` for every `v`, derived from `pred`.
fn first_hops(src: usize, pred: &[Option<usize>]) -> Vec<Option<usize>> {
    let n = pred.len();
    let mut first: Vec<Option<usize>> = vec![None; n];
    first[src] = Some(src);
    let mut stack = Vec::new();
    for v in 0..n {
        let mut cur = v;
        while first[cur].is_none() {
            match pred[cur] {
                Some(p) => {
                    stack.push(cur);
                    cur = p;
                }
                None => break,
            }
        }
        let mut hop = first[cur];
        while let Some(u) = stack.pop() {
            hop = if pred[u] == Some(src) { Some(u) } else { hop };
            first[u] = hop;
        }
    }
    first
}

/// All-pairs shortest paths by reweighting with Bellman-Ford potentials and
/// running Dijkstra from every source.
pub fn johnson(g: &Graph) -> Result<AllPairsResult> {
    let n = g.vertex_count();
    let (h, bf_checks) = johnson_potentials_run(g)?;
    let reweighted = Graph::new(
        n,
        g.edges()
            .iter()
            .map(|e| {
                let mut e = *e;
                e.w = (e.w + h[e.u] - h[e.v]).max(0.0);
                e
            })
            .collect(),
        g.is_directed(),
    )?;
    // Undirected graphs reach this point only with non-negative weights, where h == 0.
    let adj = reweighted.adjacency();
    let mut dist = DistanceMatrix::filled(n, f64::INFINITY);
    let mut next = NextHopMatrix::empty(n);
    let mut checks = bf_checks;
    let mut peak_heap = 0;
    for src in 0..n {
        let run = dijkstra_adj(&adj, src);
        checks += run.relaxations;
        peak_heap = peak_heap.max(run.peak_heap);
        let hops = first_hops(src, &run.pred);
        for v in 0..n {
            if run.dist[v] < f64::INFINITY {
                dist.set(src, v, run.dist[v] - h[src] + h[v]);
                next.set(src, v, hops[v]);
            }
        }
    }
    let storage = all_pairs_storage(n)
        + ((n + 1 + reweighted.arc_count()) * ENTRY_BYTES) as u64
        + dijkstra_storage(n, peak_heap);
    let report = ComplexityReport {
        label: "johnson".into(),
        relaxation_count: checks,
        storage_bytes: storage,
        ..Default::default()
    };
    Ok(AllPairsResult { dist, next, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Boundary, Point, PointField};
    use crate::graph::{build_complete_graph, Edge};

    fn directed(n: usize, e: &[(usize, usize, f64)]) -> Graph {
        Graph::directed(n, e.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect()).unwrap()
    }

    #[test]
    fn dijkstra_single_vertex() {
        let g = directed(1, &[]);
        assert_eq!(dijkstra(&g, 0).unwrap().dist, vec![0.0]);
    }

    #[test]
    fn dijkstra_unit_square_diagonal() {
        let b = Boundary::new(0.0, 1.0, 0.0, 1.0).unwrap();
        let pts = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)];
        let f = PointField::from_points(pts.iter().map(|&(x, y)| Point::new(x, y)).collect(), b, 0)
            .unwrap();
        let g = build_complete_graph(&f).unwrap();
        let r = dijkstra(&g, 0).unwrap();
        assert_eq!(r.dist[3], 2f64.sqrt());
        assert_eq!(r.path_to(3).unwrap(), vec![0, 3]);
    }

    #[test]
    fn dijkstra_rejects_negative() {
        let g = directed(2, &[(0, 1, -1.0)]);
        assert!(matches!(dijkstra(&g, 0), Err(Error::NegativeWeight { .. })));
        assert!(matches!(
            dijkstra(&g, 5),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn dijkstra_zero_weight_ties_stay_acyclic() {
        let g = Graph::undirected(
            3,
            vec![
                Edge::new(0, 1, 1.0),
                Edge::new(1, 2, 0.0),
                Edge::new(0, 2, 1.0),
            ],
        )
        .unwrap();
        let r = dijkstra(&g, 0).unwrap();
        assert_eq!(r.dist, vec![0.0, 1.0, 1.0]);
        assert_eq!(r.path_to(2).unwrap(), vec![0, 2]);
        assert_eq!(r.path_to(1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn bellman_ford_negative_edge() {
        let g = directed(3, &[(0, 1, 2.0), (1, 2, -1.0), (0, 2, 5.0)]);
        let r = bellman_ford(&g, 0).unwrap();
        assert_eq!(r.dist[2], 1.0);
        assert_eq!(r.path_to(2).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn bellman_ford_negative_cycle() {
        let g = directed(3, &[(0, 1, 1.0), (1, 2, -2.0), (2, 0, 0.0)]);
        assert_eq!(bellman_ford(&g, 0), Err(Error::NegativeCycle));
        assert!(matches!(floyd_warshall(&g), Err(Error::NegativeCycle)));
        assert!(matches!(johnson(&g), Err(Error::NegativeCycle)));
    }

    #[test]
    fn bellman_ford_unreachable_cycle_is_ignored() {
        // 0 -> 1, and a negative cycle 2 <-> 3 that 0 cannot reach.
        let g = directed(4, &[(0, 1, 1.0), (2, 3, -2.0), (3, 2, 1.0)]);
        let r = bellman_ford(&g, 0).unwrap();
        assert_eq!(r.dist[..2], [0.0, 1.0]);
        assert_eq!(bellman_ford(&g, 2), Err(Error::NegativeCycle));
    }

    #[test]
    fn bellman_ford_isolated_source() {
        let g = directed(3, &[(1, 2, 1.0)]);
        let r = bellman_ford(&g, 0).unwrap();
        assert_eq!(r.dist, vec![0.0, f64::INFINITY, f64::INFINITY]);
        assert!(r.path_to(2).is_err());
        assert_eq!(bellman_ford_passes(&g, 0).unwrap(), 2);
    }

    #[test]
    fn floyd_warshall_prefers_cheaper_chain() {
        let g = directed(3, &[(0, 1, 1.0), (1, 2, 2.0), (0, 2, 10.0)]);
        let r = floyd_warshall(&g).unwrap();
        assert_eq!(r.dist.get(0, 2), 3.0);
        assert_eq!(r.next.get(0, 2), Some(1));
        assert_eq!(r.path(0, 2).unwrap(), vec![0, 1, 2]);
        assert_eq!(r.next.get(2, 0), None);
    }

    #[test]
    fn floyd_warshall_counts_n_cubed() {
        let g = directed(5, &[(0, 1, 1.0)]);
        assert_eq!(floyd_warshall(&g).unwrap().report.relaxation_count, 125);
    }

    #[test]
    fn floyd_warshall_matches_bellman_ford_row() {
        let g = directed(3, &[(0, 1, 2.0), (1, 2, -1.0), (0, 2, 5.0)]);
        let fw = floyd_warshall(&g).unwrap();
        assert_eq!(fw.dist.row(0), &bellman_ford(&g, 0).unwrap().dist[..]);
    }

    #[test]
    fn undirected_negative_edge_is_a_cycle() {
        let g = Graph::undirected(2, vec![Edge::new(0, 1, -1.0)]).unwrap();
        assert!(matches!(floyd_warshall(&g), Err(Error::NegativeCycle)));
        assert!(matches!(bellman_ford(&g, 0), Err(Error::NegativeCycle)));
    }

    #[test]
    fn johnson_reweighting_by_hand() {
        let g = directed(3, &[(0, 1, 2.0), (1, 2, -1.0), (0, 2, 5.0)]);
        let h = johnson_potentials(&g).unwrap();
        assert_eq!(h, vec![0.0, 0.0, -1.0]);
        // w'(1,2) = -1 + h(1) - h(2) = 0
        assert_eq!(-1.0 + h[1] - h[2], 0.0);
        let r = johnson(&g).unwrap();
        assert_eq!(r.dist.get(0, 2), 1.0);
        assert_eq!(r.dist, floyd_warshall(&g).unwrap().dist);
        assert_eq!(r.path(0, 2).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn johnson_non_negative_matches_dijkstra() {
        let g = directed(
            4,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 3, 1.0),
                (0, 3, 5.0),
                (3, 0, 2.0),
            ],
        );
        assert!(johnson_potentials(&g).unwrap().iter().all(|&h| h == 0.0));
        let r = johnson(&g).unwrap();
        for s in 0..4 {
            assert_eq!(r.dist.row(s), &dijkstra(&g, s).unwrap().dist[..]);
        }
    }

    #[test]
    fn stacked_single_source_runs_match_floyd_warshall() {
        let g = directed(
            4,
            &[
                (0, 1, 2.0),
                (1, 2, -1.0),
                (0, 2, 4.0),
                (2, 3, 1.0),
                (3, 0, 5.0),
            ],
        );
        let runs: Vec<_> = (0..4).map(|s| bellman_ford(&g, s).unwrap()).collect();
        let stacked = AllPairsResult::from_single_source(&runs).unwrap();
        let fw = floyd_warshall(&g).unwrap();
        assert_eq!(stacked.dist, fw.dist);
        assert_eq!(stacked.path(0, 3).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(
            stacked.report.relaxation_count,
            runs.iter().map(|r| r.report.relaxation_count).sum::<u64>()
        );
        assert!(AllPairsResult::from_single_source(&runs[1..]).is_err());
    }

    #[test]
    fn first_hops_follow_tree() {
        // tree 0 -> 1 -> 2 -> 3, 0 -> 4
        let pred = vec![None, Some(0), Some(1), Some(2), Some(0), None];
        let hops = first_hops(0, &pred);
        assert_eq!(
            hops,
            vec![Some(0), Some(1), Some(1), Some(1), Some(4), None]
        );
    }
}
