//! Nature-inspired optimizers.
//!
//! * Ant System path search between two vertices of a [`Graph`]: transition
//!   weight `tau^alpha * eta^beta`, global evaporation at rate `rho` and a
//!   `Q / cost` deposit from every completed tour.
//! * Particle swarm and grey wolf minimizers over a bounded box in `R^d`.
//!
//! All randomness is drawn from a ChaCha8 stream seeded by the caller, so a run
//! is a pure function of its inputs.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Csr, DistanceMatrix, Graph, ENTRY_BYTES};
use crate::metrics::{ComplexityReport, Instrumented};

/// Visibility assigned to zero-length arcs.
pub const ETA_CAP: f64 = 1e6;
/// Pheromone floor relative to the initial trail level.
pub const TAU_FLOOR_RATIO: f64 = 1e-4;
/// Default for [`AcoParams::stall_limit`].
pub const STALL_LIMIT: usize = 5;
/// Smallest tour cost used for a deposit; keeps zero-length routes finite.
const MIN_DEPOSIT_COST: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AcoParams {
    pub alpha: f64,
    pub beta: f64,
    pub rho: f64,
    pub q: f64,
    pub n_ants: usize,
    pub n_iters: usize,
    /// Stop after this many consecutive iterations without a better route;
    /// 0 disables the rule.
    pub stall_limit: usize,
    pub seed: u64,
}

impl Default for AcoParams {
    fn default() -> Self {
        AcoParams {
            alpha: 1.0,
            beta: 2.0,
            rho: 0.5,
            q: 100.0,
            n_ants: 20,
            n_iters: 200,
            stall_limit: STALL_LIMIT,
            seed: 0,
        }
    }
}

impl AcoParams {
    pub fn with_seed(seed: u64) -> Self {
        AcoParams {
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = if !(self.rho > 0.0 && self.rho < 1.0) {
            Some("rho must lie in (0, 1)")
        } else if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            Some("alpha must be finite and >= 0")
        } else if !(self.beta >= 0.0 && self.beta.is_finite()) {
            Some("beta must be finite and >= 0")
        } else if !(self.q > 0.0 && self.q.is_finite()) {
            Some("q must be finite and > 0")
        } else if self.n_ants == 0 {
            Some("n_ants must be >= 1")
        } else if self.n_iters == 0 {
            Some("n_iters must be >= 1")
        } else {
            None
        };
        match bad {
            Some(msg) => Err(Error::param(msg)),
            None => Ok(()),
        }
    }
}

/// Trail intensities, clamped below at a positive floor.
#[derive(Debug, Clone, PartialEq)]
pub struct PheromoneMatrix {
    n: usize,
    tau: Vec<f64>,
    floor: f64,
    symmetric: bool,
}

impl PheromoneMatrix {
    /// Uniform trails at `initial`, floor at `TAU_FLOOR_RATIO * initial`.
    pub fn new(n: usize, initial: f64, symmetric: bool) -> Result<Self> {
        if !(initial > 0.0 && initial.is_finite()) {
            return Err(Error::param("initial pheromone must be finite and > 0"));
        }
        Ok(PheromoneMatrix {
            n,
            tau: vec![initial; n * n],
            floor: TAU_FLOOR_RATIO * initial,
            symmetric,
        })
    }

    pub fn with_floor(mut self, floor: f64) -> Result<Self> {
        if floor.is_nan() || floor <= 0.0 {
            return Err(Error::param("pheromone floor must be > 0"));
        }
        self.floor = floor;
        for t in &mut self.tau {
            *t = t.max(floor);
        }
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn floor(&self) -> f64 {
        self.floor
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.tau[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.tau[i * self.n..(i + 1) * self.n]
    }

    pub fn min_value(&self) -> f64 {
        self.tau.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

#[inline]
fn pow(x: f64, e: f64) -> f64 {
    if e == 1.0 {
        x
    } else if e == 0.0 {
        1.0
    } else if e == 2.0 {
        x * x
    } else {
        x.powf(e)
    }
}

/// Unnormalized preference for one move.
#[inline]
pub fn attractiveness(tau: f64, eta: f64, alpha: f64, beta: f64) -> f64 {
    pow(tau, alpha) * pow(eta, beta)
}

/// Move probabilities over `feasible`, aligned with it.
///
/// `tau_row` and `eta_row` are indexed by vertex. When every weight vanishes
/// the distribution falls back to uniform.
pub fn transition_probabilities(
    tau_row: &[f64],
    eta_row: &[f64],
    alpha: f64,
    beta: f64,
    feasible: &[usize],
) -> Result<Vec<f64>> {
    if feasible.is_empty() {
        return Err(Error::param("feasible set is empty"));
    }
    if let Some(&j) = feasible
        .iter()
        .find(|&&j| j >= tau_row.len() || j >= eta_row.len())
    {
        return Err(Error::VertexOutOfRange {
            vertex: j,
            n: tau_row.len().min(eta_row.len()),
        });
    }
    let weights: Vec<f64> = feasible
        .iter()
        .map(|&j| attractiveness(tau_row[j], eta_row[j], alpha, beta))
        .collect();
    let total: f64 = weights.iter().sum();
    if !(total > 0.0 && total.is_finite()) {
        let p = 1.0 / feasible.len() as f64;
        return Ok(vec![p; feasible.len()]);
    }
    Ok(weights.into_iter().map(|w| w / total).collect())
}

/// `tau' = max(floor, (1 - rho) * tau + sum of Q / cost over tours using the arc)`.
pub fn evaporate_and_deposit(
    tau: &mut PheromoneMatrix,
    rho: f64,
    q: f64,
    tours: &[(Vec<usize>, f64)],
) -> Result<()> {
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::param("rho must lie in (0, 1)"));
    }
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::param("q must be finite and > 0"));
    }
    let n = tau.n;
    for (path, cost) in tours {
        if !(*cost > 0.0 && cost.is_finite()) {
            return Err(Error::param(format!(
                "tour cost {cost} must be finite and > 0"
            )));
        }
        if let Some(&v) = path.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    update_trails(
        tau,
        None,
        rho,
        q,
        tours.iter().map(|(p, c)| (p.as_slice(), *c)),
    );
    Ok(())
}

/// Evaporation, deposit and floor clamp on `entries` (flat `i * n + j`
/// indices), or on the whole matrix when `entries` is `None`. Inputs are
/// assumed validated.
fn update_trails<'a>(
    tau: &mut PheromoneMatrix,
    entries: Option<&[usize]>,
    rho: f64,
    q: f64,
    tours: impl IntoIterator<Item = (&'a [usize], f64)>,
) {
    let n = tau.n;
    let keep = 1.0 - rho;
    match entries {
        Some(idx) => idx.iter().for_each(|&e| tau.tau[e] *= keep),
        None => tau.tau.iter_mut().for_each(|t| *t *= keep),
    }
    for (path, cost) in tours {
        let amount = q / cost;
        for step in path.windows(2) {
            let (a, b) = (step[0], step[1]);
            tau.tau[a * n + b] += amount;
            if tau.symmetric {
                tau.tau[b * n + a] += amount;
            }
        }
    }
    let floor = tau.floor;
    match entries {
        Some(idx) => idx.iter().for_each(|&e| tau.tau[e] = tau.tau[e].max(floor)),
        None => tau.tau.iter_mut().for_each(|t| *t = t.max(floor)),
    }
}

/// Source of the ACO visibility `eta`.
#[derive(Debug, Clone, Copy)]
pub enum Visibility<'a> {
    /// `eta(i, j) = 1 / w(i, j)`.
    InverseEdgeWeight,
    /// `eta(i, j) = 1 / d(i, j)` from a precomputed all-pairs matrix.
    Distances(&'a DistanceMatrix),
    /// `eta(i, j) = 1 / (w(i, j) + d(j, dst))`: the inverse length of the best
    /// completion through `j`. Zero when `j` cannot reach `dst`.
    DistanceToGo(&'a DistanceMatrix),
}

fn inverse(d: f64) -> f64 {
    if d > 0.0 {
        (1.0 / d).min(ETA_CAP)
    } else {
        ETA_CAP
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathResult {
    pub path: Vec<usize>,
    pub cost: f64,
    pub iterations_used: usize,
    pub best_cost_history: Vec<f64>,
    pub report: ComplexityReport,
}

impl Instrumented for PathResult {
    fn report(&self) -> &ComplexityReport {
        &self.report
    }
}

impl PathResult {
    /// `iter,best_cost` rows, one per iteration (1-based).
    pub fn history_csv(&self) -> String {
        let mut out = String::from("iter,best_cost\n");
        for (i, c) in self.best_cost_history.iter().enumerate() {
            let _ = writeln!(out, "{},{}", i + 1, c);
        }
        out
    }
}

fn reachable(csr: &Csr, src: usize, dst: usize) -> bool {
    let mut seen = vec![false; csr.vertex_count()];
    let mut stack = vec![src];
    seen[src] = true;
    while let Some(u) = stack.pop() {
        if u == dst {
            return true;
        }
        for &v in &csr.heads[csr.arcs_from(u)] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// Depth-first simple path, lowest neighbour first.
fn first_simple_path(
    adj: &[Vec<(usize, f64)>],
    src: usize,
    dst: usize,
) -> Option<(Vec<usize>, f64)> {
    let mut visited = vec![false; adj.len()];
    let mut path = vec![src];
    let mut cursor = vec![0usize];
    let mut cost = vec![0.0];
    visited[src] = true;
    while let Some(&u) = path.last() {
        if u == dst {
            return Some((path, *cost.last().unwrap()));
        }
        let c = cursor.last_mut().unwrap();
        if let Some(&(v, w)) = adj[u][*c..].iter().find(|(v, _)| !visited[*v]) {
            *c = adj[u].iter().position(|&(x, _)| x == v).unwrap() + 1;
            visited[v] = true;
            let base = *cost.last().unwrap();
            path.push(v);
            cursor.push(0);
            cost.push(base + w);
        } else {
            path.pop();
            cursor.pop();
            cost.pop();
        }
    }
    None
}

/// Ant System search for a short simple path `src -> dst`.
///
/// Each ant walks from `src`, never revisiting a vertex, choosing among
/// unvisited neighbours with probability proportional to `tau^alpha * eta^beta`.
/// Ants that run out of unvisited neighbours are dropped for that iteration.
/// The run stops after `n_iters` iterations, or earlier once every ant of an
/// iteration follows the current best path, the best route has not improved
/// for `stall_limit` iterations, or (with matrix-based visibility) the best
/// route already costs `d(src, dst)`. Edge weights must be non-negative.
pub fn aco_shortest_path(
    g: &Graph,
    src: usize,
    dst: usize,
    visibility: Visibility<'_>,
    params: &AcoParams,
) -> Result<PathResult> {
    params.validate()?;
    g.check_vertex(src)?;
    g.check_vertex(dst)?;
    if src == dst {
        return Err(Error::param("source and destination must differ"));
    }
    if let Some(e) = g.has_negative_weight() {
        return Err(Error::NegativeWeight {
            u: e.u,
            v: e.v,
            w: e.w,
        });
    }
    let n = g.vertex_count();
    if let Visibility::Distances(d) | Visibility::DistanceToGo(d) = visibility {
        if d.size() != n {
            return Err(Error::param(
                "visibility matrix size differs from the graph",
            ));
        }
    }
    let csr = g.csr();
    if !reachable(&csr, src, dst) {
        return Err(Error::Unreachable { from: src, to: dst });
    }

    let Csr {
        offsets,
        heads,
        weights: lengths,
    } = csr;
    let mut entries = Vec::with_capacity(heads.len());
    let mut eta_pow = Vec::with_capacity(heads.len());
    for u in 0..n {
        for a in offsets[u]..offsets[u + 1] {
            let (v, w) = (heads[a], lengths[a]);
            let eta = match visibility {
                Visibility::InverseEdgeWeight => inverse(w),
                Visibility::Distances(d) => inverse(d.get(u, v)),
                Visibility::DistanceToGo(d) => {
                    let rest = d.get(v, dst);
                    if rest < f64::INFINITY {
                        inverse(w + rest)
                    } else {
                        0.0
                    }
                }
            };
            entries.push(u * n + v);
            eta_pow.push(pow(eta, params.beta));
        }
    }
    let arcs = heads.len();
    // An all-pairs matrix bounds every route from below; reaching the bound ends the search.
    let lower_bound = match visibility {
        Visibility::Distances(d) | Visibility::DistanceToGo(d) => d.get(src, dst),
        Visibility::InverseEdgeWeight => f64::NEG_INFINITY,
    };

    let mut tau = PheromoneMatrix::new(n, 1.0, !g.is_directed())?;
    let mut weight = vec![0.0; arcs];
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut best_path: Vec<usize> = Vec::with_capacity(n);
    let mut best_cost: Option<f64> = None;
    let mut history = Vec::with_capacity(params.n_iters);
    let mut evaluations = 0u64;
    let mut visited = vec![false; n];
    // (arc, cumulative weight) for the current ant's feasible moves
    let mut candidates: Vec<(usize, f64)> = Vec::with_capacity(n);
    // Completed tours of the current iteration, back to back in `nodes`;
    // each span holds its range and true cost.
    let mut nodes: Vec<usize> = Vec::with_capacity(params.n_ants * n);
    let mut spans: Vec<(usize, usize, f64)> = Vec::with_capacity(params.n_ants);
    let mut iterations = 0;
    let mut stalled = 0;

    for _ in 0..params.n_iters {
        iterations += 1;
        for a in 0..arcs {
            weight[a] = pow(tau.tau[entries[a]], params.alpha) * eta_pow[a];
        }
        nodes.clear();
        spans.clear();
        let mut dead_ends = 0;
        for _ in 0..params.n_ants {
            visited.iter_mut().for_each(|x| *x = false);
            visited[src] = true;
            let start = nodes.len();
            nodes.push(src);
            let mut cost = 0.0;
            let mut cur = src;
            while cur != dst {
                candidates.clear();
                let mut total = 0.0;
                for a in offsets[cur]..offsets[cur + 1] {
                    if !visited[heads[a]] {
                        total += weight[a];
                        candidates.push((a, total));
                    }
                }
                evaluations += candidates.len() as u64;
                let Some(&(last, _)) = candidates.last() else {
                    break;
                };
                let arc = if total > 0.0 && total.is_finite() {
                    let r = rng.gen::<f64>() * total;
                    candidates.iter().find(|c| r < c.1).map_or(last, |c| c.0)
                } else {
                    candidates[rng.gen_range(0..candidates.len())].0
                };
                cur = heads[arc];
                visited[cur] = true;
                nodes.push(cur);
                cost += lengths[arc];
            }
            if cur == dst {
                spans.push((start, nodes.len(), cost));
            } else {
                dead_ends += 1;
                nodes.truncate(start);
            }
        }

        let mut improved = false;
        for &(lo, hi, cost) in &spans {
            if best_cost.is_none_or(|c| cost < c) {
                best_path.clear();
                best_path.extend_from_slice(&nodes[lo..hi]);
                best_cost = Some(cost);
                improved = true;
            }
        }
        history.push(best_cost.unwrap_or(f64::INFINITY));
        let tours = spans
            .iter()
            .map(|&(lo, hi, cost)| (&nodes[lo..hi], cost.max(MIN_DEPOSIT_COST)));
        update_trails(&mut tau, Some(&entries), params.rho, params.q, tours);

        stalled = if improved { 0 } else { stalled + 1 };
        let unanimous = dead_ends == 0
            && best_cost.is_some()
            && spans
                .iter()
                .all(|&(lo, hi, _)| nodes[lo..hi] == best_path[..]);
        let optimal = best_cost.is_some_and(|c| c <= lower_bound + 1e-12 * lower_bound.abs());
        if optimal || unanimous || (params.stall_limit > 0 && stalled >= params.stall_limit) {
            break;
        }
    }

    let (path, cost) = match best_cost {
        Some(c) => (best_path, c),
        None => first_simple_path(&g.adjacency(), src, dst)
            .ok_or(Error::Unreachable { from: src, to: dst })?,
    };
    if let Some(last) = history.last_mut() {
        *last = last.min(cost);
    }
    let report = ComplexityReport {
        label: "aco".into(),
        evaluation_count: evaluations,
        // pheromone matrix, then per-arc visibility, weight, length, head, entry
        storage_bytes: ((n * n + 5 * arcs + n + 1 + params.n_ants * n + n) * ENTRY_BYTES) as u64,
        ..Default::default()
    };
    Ok(PathResult {
        path,
        cost,
        iterations_used: iterations,
        best_cost_history: history,
        report,
    })
}

/// Parameters for the continuous minimizers.
///
/// `inertia`, `cognitive` and `social` are used by PSO only; GWO's coefficient
/// `a` decays linearly from 2 to 0 over the run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwarmMinParams {
    pub population: usize,
    pub n_iters: usize,
    pub bounds: Vec<(f64, f64)>,
    pub seed: u64,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
}

impl SwarmMinParams {
    /// Constriction-equivalent PSO coefficients (w = 0.7298, c1 = c2 = 1.49618).
    pub fn new(population: usize, n_iters: usize, bounds: Vec<(f64, f64)>, seed: u64) -> Self {
        SwarmMinParams {
            population,
            n_iters,
            bounds,
            seed,
            inertia: 0.7298,
            cognitive: 1.49618,
            social: 1.49618,
        }
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(Error::param("population must be >= 2"));
        }
        if self.n_iters == 0 {
            return Err(Error::param("n_iters must be >= 1"));
        }
        if self.bounds.is_empty() {
            return Err(Error::param("at least one dimension is required"));
        }
        if let Some(d) = self
            .bounds
            .iter()
            .position(|&(lo, hi)| !(lo < hi && lo.is_finite() && hi.is_finite()))
        {
            return Err(Error::param(format!("dimension {d}: need finite lo < hi")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub position: Vec<f64>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizeResult {
    pub best_position: Vec<f64>,
    pub best_value: f64,
    /// Global best after initialization and after every update round.
    pub history: Vec<f64>,
    /// PSO: the global best. GWO: alpha, beta, delta.
    pub leaders: Vec<Candidate>,
    pub report: ComplexityReport,
}

impl Instrumented for MinimizeResult {
    fn report(&self) -> &ComplexityReport {
        &self.report
    }
}

fn score(v: f64) -> f64 {
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

fn sample_box(rng: &mut ChaCha8Rng, bounds: &[(f64, f64)]) -> Vec<f64> {
    bounds
        .iter()
        .map(|&(lo, hi)| rng.gen_range(lo..=hi))
        .collect()
}

/// Global-best particle swarm.
///
/// `n_iters` counts the initial evaluation, so `n_iters = 1` evaluates the
/// random initial swarm only.
pub fn pso_minimize<F>(objective: F, params: &SwarmMinParams) -> Result<MinimizeResult>
where
    F: Fn(&[f64]) -> f64,
{
    params.validate()?;
    let dim = params.dim();
    let pop = params.population;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let vmax: Vec<f64> = params.bounds.iter().map(|&(lo, hi)| hi - lo).collect();

    let mut pos: Vec<Vec<f64>> = (0..pop)
        .map(|_| sample_box(&mut rng, &params.bounds))
        .collect();
    let mut vel: Vec<Vec<f64>> = (0..pop)
        .map(|_| vmax.iter().map(|&m| rng.gen_range(-m..=m)).collect())
        .collect();
    let mut evaluations = 0u64;
    let mut values: Vec<f64> = pos
        .iter()
        .map(|x| {
            evaluations += 1;
            score(objective(x))
        })
        .collect();
    let mut pbest = pos.clone();
    let mut pbest_val = values.clone();
    let mut g = argmin(&pbest_val);
    let mut gbest = pbest[g].clone();
    let mut gbest_val = pbest_val[g];
    let mut history = vec![gbest_val];

    for _ in 1..params.n_iters {
        for i in 0..pop {
            for d in 0..dim {
                let (r1, r2): (f64, f64) = (rng.gen(), rng.gen());
                let v = params.inertia * vel[i][d]
                    + params.cognitive * r1 * (pbest[i][d] - pos[i][d])
                    + params.social * r2 * (gbest[d] - pos[i][d]);
                vel[i][d] = v.clamp(-vmax[d], vmax[d]);
                let (lo, hi) = params.bounds[d];
                pos[i][d] = (pos[i][d] + vel[i][d]).clamp(lo, hi);
            }
            evaluations += 1;
            values[i] = score(objective(&pos[i]));
            if values[i] < pbest_val[i] {
                pbest_val[i] = values[i];
                pbest[i].clone_from(&pos[i]);
            }
        }
        g = argmin(&pbest_val);
        if pbest_val[g] < gbest_val {
            gbest_val = pbest_val[g];
            gbest.clone_from(&pbest[g]);
        }
        history.push(gbest_val);
    }

    let report = ComplexityReport {
        label: "pso".into(),
        evaluation_count: evaluations,
        // positions, velocities, personal bests, plus per-particle scalars
        storage_bytes: ((3 * pop * dim + 2 * pop + 2 * dim) * ENTRY_BYTES) as u64,
        ..Default::default()
    };
    Ok(MinimizeResult {
        leaders: vec![Candidate {
            position: gbest.clone(),
            value: gbest_val,
        }],
        best_position: gbest,
        best_value: gbest_val,
        history,
        report,
    })
}

fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v < values[best] {
            best = i;
        }
    }
    best
}

/// Inserts a candidate into the sorted leader list if it beats one of them.
fn promote(leaders: &mut Vec<Candidate>, cap: usize, position: &[f64], value: f64) {
    let at = leaders
        .iter()
        .position(|l| value < l.value)
        .unwrap_or(leaders.len());
    if at < cap {
        leaders.insert(
            at,
            Candidate {
                position: position.to_vec(),
                value,
            },
        );
        leaders.truncate(cap);
    }
}

/// Grey wolf optimizer: wolves move toward the mean of three leader-guided
/// targets while the exploration coefficient `a` decays linearly from 2 to 0.
///
/// `n_iters` counts the initial evaluation, as in [`pso_minimize`].
pub fn gwo_minimize<F>(objective: F, params: &SwarmMinParams) -> Result<MinimizeResult>
where
    F: Fn(&[f64]) -> f64,
{
    params.validate()?;
    let dim = params.dim();
    let pop = params.population;
    let cap = pop.min(3);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut wolves: Vec<Vec<f64>> = (0..pop)
        .map(|_| sample_box(&mut rng, &params.bounds))
        .collect();
    let mut evaluations = 0u64;
    let mut leaders: Vec<Candidate> = Vec::with_capacity(cap + 1);
    for w in &wolves {
        evaluations += 1;
        promote(&mut leaders, cap, w, score(objective(w)));
    }
    let mut history = vec![leaders[0].value];
    let last = (params.n_iters - 1).max(1) as f64;

    for t in 1..params.n_iters {
        let a = 2.0 * (1.0 - t as f64 / last);
        for wolf in wolves.iter_mut() {
            for d in 0..dim {
                let mut target = 0.0;
                for l in 0..3 {
                    let leader = &leaders[l.min(leaders.len() - 1)].position;
                    let (r1, r2): (f64, f64) = (rng.gen(), rng.gen());
                    let big_a = 2.0 * a * r1 - a;
                    let c = 2.0 * r2;
                    let dist = (c * leader[d] - wolf[d]).abs();
                    target += leader[d] - big_a * dist;
                }
                let (lo, hi) = params.bounds[d];
                wolf[d] = (target / 3.0).clamp(lo, hi);
            }
        }
        for w in &wolves {
            evaluations += 1;
            promote(&mut leaders, cap, w, score(objective(w)));
        }
        history.push(leaders[0].value);
    }

    let report = ComplexityReport {
        label: "gwo".into(),
        evaluation_count: evaluations,
        storage_bytes: ((pop * dim + pop + 3 * (dim + 1)) * ENTRY_BYTES) as u64,
        ..Default::default()
    };
    Ok(MinimizeResult {
        best_position: leaders[0].position.clone(),
        best_value: leaders[0].value,
        history,
        leaders,
        report,
    })
}
