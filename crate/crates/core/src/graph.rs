//! Weighted graphs and the dense all-pairs containers shared by every algorithm.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PointField;

/// Dense-storage entry size, in bytes, used for analytic footprints.
pub const ENTRY_BYTES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

impl Edge {
    pub const fn new(u: usize, v: usize, w: f64) -> Self {
        Edge { u, v, w }
    }
}

/// A weighted graph over vertices `0..n`.
///
/// Undirected graphs store each edge once; [`Graph::arcs`] yields both
/// orientations. Negative weights are representable; each algorithm decides
/// whether it accepts them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    directed: bool,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<Edge>, directed: bool) -> Result<Self> {
        for e in &edges {
            let reason = if e.u >= n || e.v >= n {
                Some("endpoint out of range")
            } else if e.u == e.v {
                Some("self-loop")
            } else if !e.w.is_finite() {
                Some("non-finite weight")
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Error::InvalidEdge {
                    u: e.u,
                    v: e.v,
                    w: e.w,
                    reason,
                });
            }
        }
        Ok(Graph { n, edges, directed })
    }

    pub fn directed(n: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::new(n, edges, true)
    }

    pub fn undirected(n: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::new(n, edges, false)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Every traversable arc `(from, to, w)`; undirected edges appear twice.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.edges.iter().flat_map(move |e| {
            let back = (!self.directed).then_some((e.v, e.u, e.w));
            std::iter::once((e.u, e.v, e.w)).chain(back)
        })
    }

    pub fn arc_count(&self) -> usize {
        if self.directed {
            self.edges.len()
        } else {
            2 * self.edges.len()
        }
    }

    pub fn has_negative_weight(&self) -> Option<Edge> {
        self.edges.iter().copied().find(|e| e.w < 0.0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Out-neighbour lists sorted by neighbour index; parallel arcs collapse to the lightest.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut degree = vec![0usize; self.n];
        for e in &self.edges {
            degree[e.u] += 1;
            if !self.directed {
                degree[e.v] += 1;
            }
        }
        let mut adj: Vec<Vec<(usize, f64)>> = degree.into_iter().map(Vec::with_capacity).collect();
        for e in &self.edges {
            adj[e.u].push((e.v, e.w));
            if !self.directed {
                adj[e.v].push((e.u, e.w));
            }
        }
        for list in &mut adj {
            if !list.windows(2).all(|p| p[0].0 < p[1].0) {
                list.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
                list.dedup_by_key(|a| a.0);
            }
        }
        adj
    }

    /// Compressed adjacency with the same ordering and collapsing as [`Graph::adjacency`].
    pub fn csr(&self) -> Csr {
        let n = self.n;
        let mut start = vec![0usize; n + 1];
        for e in &self.edges {
            start[e.u + 1] += 1;
            if !self.directed {
                start[e.v + 1] += 1;
            }
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut slots = vec![(0usize, 0.0f64); start[n]];
        for e in &self.edges {
            slots[fill[e.u]] = (e.v, e.w);
            fill[e.u] += 1;
            if !self.directed {
                slots[fill[e.v]] = (e.u, e.w);
                fill[e.v] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut heads = Vec::with_capacity(slots.len());
        let mut weights = Vec::with_capacity(slots.len());
        offsets.push(0);
        for u in 0..n {
            let seg = &mut slots[start[u]..start[u + 1]];
            let sorted = seg.windows(2).all(|p| p[0].0 < p[1].0);
            if !sorted {
                seg.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
            }
            for &(v, w) in seg.iter() {
                if sorted || heads.len() == offsets[u] || heads.last() != Some(&v) {
                    heads.push(v);
                    weights.push(w);
                }
            }
            offsets.push(heads.len());
        }
        Csr {
            offsets,
            heads,
            weights,
        }
    }

    /// Weight of the lightest arc `u -> v`, if any.
    pub fn arc_weight(&self, u: usize, v: usize) -> Option<f64> {
        self.arcs()
            .filter(|&(a, b, _)| a == u && b == v)
            .map(|(_, _, w)| w)
            .min_by(f64::total_cmp)
    }

    /// Sum of arc weights along `path`, or `None` if a consecutive pair is not an arc.
    pub fn path_cost(&self, path: &[usize]) -> Option<f64> {
        path.windows(2)
            .map(|p| self.arc_weight(p[0], p[1]))
            .sum::<Option<f64>>()
    }
}

/// Flattened out-neighbour lists, as produced by [`Graph::csr`].
#[derive(Debug, Clone, PartialEq)]
pub struct Csr {
    pub offsets: Vec<usize>,
    pub heads: Vec<usize>,
    pub weights: Vec<f64>,
}

impl Csr {
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn arcs_from(&self, u: usize) -> std::ops::Range<usize> {
        self.offsets[u]..self.offsets[u + 1]
    }
}

/// Complete undirected graph with Euclidean edge weights.
pub fn build_complete_graph(field: &PointField) -> Result<Graph> {
    if field.is_empty() {
        return Err(Error::EmptyInput("point field has no points"));
    }
    let pts = field.points();
    let n = pts.len();
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push(Edge::new(u, v, pts[u].distance(&pts[v])));
        }
    }
    Graph::undirected(n, edges)
}

/// Undirected k-nearest-neighbour graph (union of every vertex's `k` nearest).
///
/// Distance ties go to the lower vertex index. The result may be disconnected.
pub fn build_knn_graph(field: &PointField, k: usize) -> Result<Graph> {
    let n = field.len();
    if n == 0 {
        return Err(Error::EmptyInput("point field has no points"));
    }
    if k == 0 || k >= n {
        return Err(Error::param(format!(
            "k = {k} must satisfy 1 <= k < n = {n}"
        )));
    }
    let pts = field.points();
    let mut keep = vec![false; n * n];
    // The k nearest so far, ascending by (squared distance, index).
    let mut nearest = vec![(0.0f64, 0usize); k];
    for (u, p) in pts.iter().enumerate() {
        let mut len = 0;
        for (v, q) in pts.iter().enumerate().filter(|&(v, _)| v != u) {
            let (dx, dy) = (p.x - q.x, p.y - q.y);
            let d = dx * dx + dy * dy;
            if len == k && d >= nearest[k - 1].0 {
                continue;
            }
            let mut at = if len < k {
                len += 1;
                len - 1
            } else {
                k - 1
            };
            // Candidates arrive in index order, so equal distances stay behind earlier ones.
            while at > 0 && nearest[at - 1].0 > d {
                nearest[at] = nearest[at - 1];
                at -= 1;
            }
            nearest[at] = (d, v);
        }
        for &(_, v) in &nearest[..len] {
            keep[u.min(v) * n + u.max(v)] = true;
        }
    }
    let mut edges = Vec::with_capacity(n * k);
    for u in 0..n {
        for v in u + 1..n {
            if keep[u * n + v] {
                edges.push(Edge::new(u, v, pts[u].distance(&pts[v])));
            }
        }
    }
    Graph::undirected(n, edges)
}

/// Row-major `n x n` shortest-path costs; `f64::INFINITY` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn filled(n: usize, value: f64) -> Self {
        DistanceMatrix {
            n,
            data: vec![value; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::param("distance matrix rows must all have length n"));
        }
        Ok(DistanceMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, d: f64) {
        self.data[i * self.n + j] = d;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn storage_bytes(&self) -> usize {
        self.n * self.n * ENTRY_BYTES
    }
}

/// `next[i][j]`: the vertex after `i` on a shortest `i -> j` path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NextHopMatrix {
    n: usize,
    data: Vec<usize>,
}

impl NextHopMatrix {
    const NONE: usize = usize::MAX;

    pub fn empty(n: usize) -> Self {
        NextHopMatrix {
            n,
            data: vec![Self::NONE; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.data[i * self.n + j];
        (v != Self::NONE).then_some(v)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, hop: Option<usize>) {
        self.data[i * self.n + j] = hop.unwrap_or(Self::NONE);
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [usize] {
        &mut self.data
    }

    pub fn storage_bytes(&self) -> usize {
        self.n * self.n * ENTRY_BYTES
    }
}

/// Walks the next-hop matrix from `i` to `j`.
pub fn reconstruct_path(next: &NextHopMatrix, i: usize, j: usize) -> Result<Vec<usize>> {
    let n = next.size();
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i == j {
        return Ok(vec![i]);
    }
    let mut path = vec![i];
    let mut cur = i;
    while cur != j {
        cur = next
            .get(cur, j)
            .ok_or(Error::Unreachable { from: i, to: j })?;
        path.push(cur);
        // A hop chain longer than n - 1 can only come from a negative cycle.
        if path.len() > n {
            return Err(Error::NegativeCycle);
        }
    }
    Ok(path)
}
