//! Floyd-Warshall seeded Ant System routing on bounded point fields.
//!
//! Two pipelines answer a single `src -> dst` route query:
//!
//! * [`Variant::GeneralFwAco`]: complete Euclidean graph, plain Floyd-Warshall,
//!   then ACO over the complete graph with `eta = 1 / d_fw`.
//! * [`Variant::ModifiedFwAco`]: k-nearest-neighbour graph, pruned
//!   Floyd-Warshall ([`modified_floyd_warshall`]), then ACO over the sparse
//!   graph with the same visibility. If the sparse graph leaves `dst`
//!   unreachable, `k` is doubled and the stage repeats, at most
//!   `ceil(log2 n)` times.
//!
//! The pruned Floyd-Warshall skips relaxations through `k` that cannot change
//! anything: pairs where `d[i][k]` or `d[k][j]` is infinite, and pairs with
//! `i == k` or `j == k`. Its distance matrix is bit-identical to
//! [`floyd_warshall`]'s.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    all_pairs_storage, check_diagonal, floyd_warshall, init_all_pairs, relax_row, row_pair,
    AllPairsResult,
};
use crate::geometry::PointField;
use crate::graph::{build_complete_graph, build_knn_graph, Graph};
use crate::io::path_listing_csv;
use crate::metrics::{ComplexityReport, Instrumented};
use crate::swarm::{aco_shortest_path, AcoParams, PathResult, Visibility};

/// Floyd-Warshall without the relaxations that provably cannot improve a pair.
///
/// Pivots whose row is entirely infinite and rows that cannot reach the pivot
/// are skipped.
pub fn modified_floyd_warshall(g: &Graph) -> Result<AllPairsResult> {
    let n = g.vertex_count();
    let (mut dist, mut next) = init_all_pairs(g);
    let checks = skip_unreachable(n, dist.as_mut_slice(), next.raw_mut());
    check_diagonal(&dist)?;
    let report = ComplexityReport {
        label: "modified_floyd_warshall".into(),
        relaxation_count: checks,
        storage_bytes: all_pairs_storage(n),
        ..Default::default()
    };
    Ok(AllPairsResult { dist, next, report })
}

fn skip_unreachable(n: usize, d: &mut [f64], nx: &mut [usize]) -> u64 {
    let mut checks = 0u64;
    for k in 0..n {
        // Pivot columns that can improve anything: j != k with d[k][j] finite.
        let live = (0..n)
            .filter(|&j| j != k && d[k * n + j] < f64::INFINITY)
            .count() as u64;
        if live == 0 {
            continue;
        }
        for i in (0..n).filter(|&i| i != k) {
            let dik = d[i * n + k];
            if dik == f64::INFINITY {
                continue;
            }
            let hop = nx[i * n + k];
            let (row_i, row_k) = row_pair(d, n, i, k);
            // The dead columns (infinite d[k][j], and j == k with d[k][k] = 0)
            // are swept along as no-ops rather than branched around; only
            // the live ones are counted.
            relax_row(dik, hop, row_i, row_k, &mut nx[i * n..(i + 1) * n]);
            checks += live;
        }
    }
    checks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    GeneralFwAco,
    ModifiedFwAco,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::GeneralFwAco, Variant::ModifiedFwAco];

    pub fn name(self) -> &'static str {
        match self {
            Variant::GeneralFwAco => "general_fw_aco",
            Variant::ModifiedFwAco => "modified_fw_aco",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HybridParams {
    /// Sparsification degree; `None` selects [`default_knn_k`].
    pub knn_k: Option<usize>,
    pub aco: AcoParams,
    pub variant: Variant,
}

impl HybridParams {
    pub fn new(variant: Variant) -> Self {
        HybridParams {
            knn_k: None,
            aco: AcoParams::default(),
            variant,
        }
    }
}

/// `max(3, ceil(log2 n))`, capped at `n - 1`.
pub fn default_knn_k(n: usize) -> usize {
    max_repairs(n).max(3).min(n.saturating_sub(1)).max(1)
}

fn max_repairs(n: usize) -> usize {
    // ceil(log2 n)
    n.max(1).next_power_of_two().trailing_zeros() as usize
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HybridResult {
    pub variant: Variant,
    pub src: usize,
    pub dst: usize,
    /// Final k for the sparse variant after any connectivity repairs.
    pub knn_k: Option<usize>,
    pub edge_count: usize,
    pub route: PathResult,
    pub all_pairs: AllPairsResult,
    /// graph build, shortest-path stage, ACO stage
    pub stages: Vec<ComplexityReport>,
    pub combined: ComplexityReport,
}

impl Instrumented for HybridResult {
    fn report(&self) -> &ComplexityReport {
        &self.combined
    }
}

#[derive(Serialize)]
struct HybridSummary<'a> {
    variant: Variant,
    params: &'a HybridParams,
    src: usize,
    dst: usize,
    knn_k: Option<usize>,
    edge_count: usize,
    route: &'a [usize],
    route_cost: f64,
    fw_distance: f64,
    iterations_used: usize,
    stages: &'a [ComplexityReport],
    combined: &'a ComplexityReport,
}

impl HybridResult {
    pub fn to_json(&self, params: &HybridParams) -> String {
        let summary = HybridSummary {
            variant: self.variant,
            params,
            src: self.src,
            dst: self.dst,
            knn_k: self.knn_k,
            edge_count: self.edge_count,
            route: &self.route.path,
            route_cost: self.route.cost,
            fw_distance: self.all_pairs.dist.get(self.src, self.dst),
            iterations_used: self.route.iterations_used,
            stages: &self.stages,
            combined: &self.combined,
        };
        serde_json::to_string_pretty(&summary).expect("hybrid summary is serializable")
    }
}

fn stage<T>(
    label: &str,
    f: impl FnOnce() -> Result<T>,
    counters: impl FnOnce(&T) -> ComplexityReport,
) -> Result<(T, ComplexityReport)> {
    let start = Instant::now();
    let out = f()?;
    let secs = start.elapsed().as_secs_f64();
    let mut report = counters(&out).with_label(label);
    report.wall_time_s = secs;
    Ok((out, report))
}

fn graph_report(g: &Graph) -> ComplexityReport {
    ComplexityReport {
        storage_bytes: (3 * g.edge_count() * crate::graph::ENTRY_BYTES) as u64,
        ..Default::default()
    }
}

/// Routes `src -> dst` across `field` with the selected pipeline.
pub fn run_hybrid(
    field: &PointField,
    src: usize,
    dst: usize,
    params: &HybridParams,
) -> Result<HybridResult> {
    let n = field.len();
    for v in [src, dst] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if src == dst {
        return Err(Error::param("source and destination must differ"));
    }
    params.aco.validate()?;

    let (graph, all_pairs, knn_k, mut stages) = match params.variant {
        Variant::GeneralFwAco => {
            let (g, gr) = stage(
                "complete_graph",
                || build_complete_graph(field),
                graph_report,
            )?;
            let (ap, fr) = stage(
                "floyd_warshall",
                || floyd_warshall(&g),
                |r| r.report.clone(),
            )?;
            (g, ap, None, vec![gr, fr])
        }
        Variant::ModifiedFwAco => {
            let mut k = match params.knn_k {
                Some(k) if k == 0 || k >= n => {
                    return Err(Error::param(format!(
                        "knn_k = {k} must satisfy 1 <= k < n = {n}"
                    )))
                }
                Some(k) => k,
                None => default_knn_k(n),
            };
            let mut repairs = 0;
            // Discarded attempts still count toward their stage's cost.
            let mut spent_graph = ComplexityReport::default();
            let mut spent_fw = ComplexityReport::default();
            loop {
                let (g, mut gr) = stage("knn_graph", || build_knn_graph(field, k), graph_report)?;
                let (ap, mut fr) = stage(
                    "modified_floyd_warshall",
                    || modified_floyd_warshall(&g),
                    |r| r.report.clone(),
                )?;
                if ap.dist.get(src, dst) < f64::INFINITY {
                    gr.absorb(&spent_graph);
                    fr.absorb(&spent_fw);
                    break (g, ap, Some(k), vec![gr, fr]);
                }
                if repairs >= max_repairs(n) || k == n - 1 {
                    return Err(Error::Unreachable { from: src, to: dst });
                }
                spent_graph.absorb(&gr);
                spent_fw.absorb(&fr);
                repairs += 1;
                k = (2 * k).min(n - 1);
            }
        }
    };

    let visibility = Visibility::DistanceToGo(&all_pairs.dist);
    let (route, ar) = stage(
        "aco",
        || aco_shortest_path(&graph, src, dst, visibility, &params.aco),
        |r| r.report.clone(),
    )?;
    stages.push(ar);

    let mut combined = ComplexityReport::new(params.variant.name());
    for s in &stages {
        combined.absorb(s);
    }
    Ok(HybridResult {
        variant: params.variant,
        src,
        dst,
        knn_k,
        edge_count: graph.edge_count(),
        route,
        all_pairs,
        stages,
        combined,
    })
}

/// Output of the plain all-pairs pipeline: every shortest path, listed.
#[derive(Debug, Clone, PartialEq)]
pub struct PlainListing {
    pub all_pairs: AllPairsResult,
    pub listing: String,
    pub report: ComplexityReport,
}

impl Instrumented for PlainListing {
    fn report(&self) -> &ComplexityReport {
        &self.report
    }
}

/// Label of the [`run_plain_listing`] report.
pub const PLAIN_LISTING_LABEL: &str = "plain_fw_listing";

/// Complete graph, plain Floyd-Warshall, and the full per-pair path listing.
pub fn run_plain_listing(field: &PointField) -> Result<PlainListing> {
    let g = build_complete_graph(field)?;
    let all_pairs = floyd_warshall(&g)?;
    let listing = path_listing_csv(&all_pairs);
    let mut report = graph_report(&g).with_label(PLAIN_LISTING_LABEL);
    report.absorb(&all_pairs.report);
    report.storage_bytes += listing.len() as u64;
    Ok(PlainListing {
        all_pairs,
        listing,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{generate_points, Boundary, Point};
    use crate::graph::Edge;

    fn clusters() -> PointField {
        let pts = [
            (0.0, 0.0),
            (1.0, 0.0),
            (0.0, 1.0),
            (1.0, 1.0),
            (99.0, 99.0),
            (100.0, 99.0),
            (99.0, 100.0),
            (100.0, 100.0),
        ];
        PointField::from_points(
            pts.iter().map(|&(x, y)| Point::new(x, y)).collect(),
            Boundary::default(),
            0,
        )
        .unwrap()
    }

    #[test]
    fn modified_matches_plain_on_directed_graph() {
        let g = Graph::directed(
            5,
            vec![
                Edge::new(0, 1, 4.0),
                Edge::new(0, 2, 1.0),
                Edge::new(2, 1, -2.0),
                Edge::new(1, 3, 3.0),
                Edge::new(3, 4, 1.0),
            ],
        )
        .unwrap();
        let m = modified_floyd_warshall(&g).unwrap();
        let p = floyd_warshall(&g).unwrap();
        assert_eq!(m.dist, p.dist);
        assert!(m.report.relaxation_count < p.report.relaxation_count);
    }

    #[test]
    fn modified_single_vertex() {
        let g = Graph::directed(1, vec![]).unwrap();
        let r = modified_floyd_warshall(&g).unwrap();
        assert_eq!(r.dist.get(0, 0), 0.0);
        assert_eq!(r.report.relaxation_count, 0);
    }

    #[test]
    fn modified_skips_work_on_complete_field() {
        let f = generate_points(10, Boundary::default(), 42).unwrap();
        let g = build_complete_graph(&f).unwrap();
        let m = modified_floyd_warshall(&g).unwrap();
        assert_eq!(m.dist, floyd_warshall(&g).unwrap().dist);
        // the pivot row and column are never live
        assert_eq!(m.report.relaxation_count, 10 * 9 * 9);
    }

    #[test]
    fn undirected_graphs_match_plain_including_next_hops() {
        for seed in 0..40 {
            let f = generate_points(12, Boundary::default(), seed).unwrap();
            for g in [
                build_knn_graph(&f, 2).unwrap(),
                build_complete_graph(&f).unwrap(),
            ] {
                let m = modified_floyd_warshall(&g).unwrap();
                let p = floyd_warshall(&g).unwrap();
                assert_eq!(m.dist, p.dist, "seed {seed}");
                assert_eq!(m.next, p.next, "seed {seed}");
            }
        }
    }

    #[test]
    fn undirected_negative_edge_is_a_cycle() {
        let g = Graph::undirected(3, vec![Edge::new(0, 1, 2.0), Edge::new(1, 2, -1.0)]).unwrap();
        assert!(matches!(
            modified_floyd_warshall(&g),
            Err(Error::NegativeCycle)
        ));
    }

    #[test]
    fn modified_flags_negative_cycle() {
        let g = Graph::directed(2, vec![Edge::new(0, 1, 1.0), Edge::new(1, 0, -2.0)]).unwrap();
        assert!(matches!(
            modified_floyd_warshall(&g),
            Err(Error::NegativeCycle)
        ));
    }

    #[test]
    fn default_k_follows_log2() {
        assert_eq!(default_knn_k(2), 1);
        assert_eq!(default_knn_k(4), 3);
        assert_eq!(default_knn_k(10), 4);
        assert_eq!(default_knn_k(16), 4);
        assert_eq!(default_knn_k(17), 5);
    }

    #[test]
    fn five_points_reach_the_optimum() {
        let f = generate_points(5, Boundary::default(), 7).unwrap();
        for variant in Variant::ALL {
            let r = run_hybrid(&f, 0, 4, &HybridParams::new(variant)).unwrap();
            assert_eq!(r.route.cost, r.all_pairs.dist.get(0, 4), "{variant:?}");
            assert_eq!(r.route.path.first(), Some(&0));
            assert_eq!(r.route.path.last(), Some(&4));
            assert_eq!(r.stages.len(), 3);
        }
    }

    #[test]
    fn same_endpoints_rejected() {
        let f = generate_points(5, Boundary::default(), 7).unwrap();
        let p = HybridParams::new(Variant::GeneralFwAco);
        assert!(matches!(
            run_hybrid(&f, 0, 0, &p),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            run_hybrid(&f, 0, 5, &p),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn explicit_k_must_be_below_n() {
        let f = generate_points(5, Boundary::default(), 7).unwrap();
        let mut p = HybridParams::new(Variant::ModifiedFwAco);
        p.knn_k = Some(5);
        assert!(run_hybrid(&f, 0, 4, &p).is_err());
        p.knn_k = Some(0);
        assert!(run_hybrid(&f, 0, 4, &p).is_err());
    }

    #[test]
    fn disconnected_clusters_are_repaired() {
        let f = clusters();
        let mut p = HybridParams::new(Variant::ModifiedFwAco);
        p.knn_k = Some(3);
        let r = run_hybrid(&f, 0, 7, &p).unwrap();
        assert_eq!(r.knn_k, Some(6));
        assert!(r.route.cost >= r.all_pairs.dist.get(0, 7));
        // the discarded 3-NN attempt is charged to the shortest-path stage
        let single = modified_floyd_warshall(&build_knn_graph(&f, 6).unwrap()).unwrap();
        assert!(r.stages[1].relaxation_count > single.report.relaxation_count);
    }

    #[test]
    fn runs_are_reproducible() {
        let f = generate_points(10, Boundary::default(), 3).unwrap();
        let p = HybridParams::new(Variant::ModifiedFwAco);
        let a = run_hybrid(&f, 0, 9, &p).unwrap();
        let b = run_hybrid(&f, 0, 9, &p).unwrap();
        assert_eq!(a.route, b.route);
        assert_eq!(a.all_pairs.dist, b.all_pairs.dist);
        let strip = |r: &HybridResult| {
            let mut v: serde_json::Value = serde_json::from_str(&r.to_json(&p)).unwrap();
            for s in v["stages"].as_array_mut().unwrap() {
                s["wall_time_s"] = 0.into();
            }
            v["combined"]["wall_time_s"] = 0.into();
            v
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn plain_listing_covers_every_pair() {
        let f = generate_points(5, Boundary::default(), 1).unwrap();
        let r = run_plain_listing(&f).unwrap();
        assert_eq!(r.listing.lines().count(), 1 + 5 * 4);
        assert_eq!(r.report.relaxation_count, 125);
    }
}
