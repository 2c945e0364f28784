//! The four experiment commands. Each validates the whole configuration
//! before running anything and writes only inside the output directory.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use quasiroute::hybrid::{run_plain_listing, PLAIN_LISTING_LABEL};
use quasiroute::io::{distance_matrix_csv, parse_edges_csv, path_listing_csv, points_csv};
use quasiroute::metrics::measure_median;
use quasiroute::{
    bellman_ford, build_complete_graph, compare, dijkstra, floyd_warshall, generate_points,
    johnson, modified_floyd_warshall, run_hybrid, AllPairsResult, ComplexityReport, Graph,
    HybridParams, PointField, SingleSourceResult, Variant,
};

use crate::config::{ExperimentConfig, EXACT_ALGORITHMS, PIPELINES};
use crate::error::{CliError, Result};
use crate::plots;

/// Files written by a command, in creation order.
#[derive(Debug)]
pub struct Outputs {
    dir: PathBuf,
    hash: String,
    pub files: Vec<PathBuf>,
}

impl Outputs {
    fn create(dir: &Path, hash: String) -> Result<Self> {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        Ok(Outputs {
            dir: dir.to_path_buf(),
            hash,
            files: Vec::new(),
        })
    }

    fn write(&mut self, name: &str, body: &str) -> Result<()> {
        let path = self.dir.join(name);
        fs::write(&path, body).map_err(|e| CliError::io(&path, e))?;
        self.files.push(path);
        Ok(())
    }

    /// CSV with the config-hash comment line in front.
    fn csv(&mut self, name: &str, body: &str) -> Result<()> {
        let text = format!("# config-hash: {}\n{body}", self.hash);
        self.write(name, &text)
    }
}

fn field(cfg: &ExperimentConfig) -> Result<PointField> {
    Ok(generate_points(cfg.n_points, cfg.boundary, cfg.seed)?)
}

/// `points.csv` and `points.svg` for the configured field.
pub fn generate(cfg: &ExperimentConfig) -> Result<Outputs> {
    cfg.validate()?;
    let f = field(cfg)?;
    let mut out = Outputs::create(&cfg.out, cfg.hash(None))?;
    out.csv("points.csv", &points_csv(&f))?;
    out.write("points.svg", &plots::scatter(f.points(), *f.boundary()))?;
    Ok(out)
}

/// Every source's single-source run stacked into one all-pairs result.
fn per_source(
    g: &Graph,
    label: &str,
    run: fn(&Graph, usize) -> quasiroute::Result<SingleSourceResult>,
) -> quasiroute::Result<AllPairsResult> {
    let runs = (0..g.vertex_count())
        .map(|s| run(g, s))
        .collect::<quasiroute::Result<Vec<_>>>()?;
    let mut r = AllPairsResult::from_single_source(&runs)?;
    r.report.label = label.to_string();
    Ok(r)
}

fn run_exact(name: &str, g: &Graph) -> quasiroute::Result<AllPairsResult> {
    match name {
        "floyd_warshall" => floyd_warshall(g),
        "modified_floyd_warshall" => modified_floyd_warshall(g),
        "johnson" => johnson(g),
        "bellman_ford" => per_source(g, name, bellman_ford),
        "dijkstra" => per_source(g, name, dijkstra),
        _ => unreachable!("algorithm names are validated"),
    }
}

fn reject_dijkstra_on_negative(algos: &[String], g: &Graph) -> Result<()> {
    if let Some(e) = g.has_negative_weight() {
        if algos.iter().any(|a| a == "dijkstra") {
            return Err(CliError::invalid(format!(
                "dijkstra needs non-negative weights, but {}->{} weighs {}",
                e.u, e.v, e.w
            )));
        }
    }
    Ok(())
}

/// Distance matrix and path listing per exact algorithm, plus the
/// full-connection and shortest-path figures.
pub fn allpairs(cfg: &ExperimentConfig) -> Result<Outputs> {
    cfg.validate()?;
    let algos = cfg.algorithms_among(&EXACT_ALGORITHMS, &["floyd_warshall"])?;
    let (g, pts, boundary, edges_text) = match &cfg.edges {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            let g = parse_edges_csv(&text, cfg.directed, None)
                .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
            let (pts, b) = plots::circle_layout(g.vertex_count());
            (g, pts, b, Some(text))
        }
        None => {
            if cfg.n_points == 0 {
                return Err(CliError::invalid("allpairs needs n_points >= 1"));
            }
            let f = field(cfg)?;
            let g = build_complete_graph(&f)?;
            (g, f.points().to_vec(), *f.boundary(), None)
        }
    };
    reject_dijkstra_on_negative(&algos, &g)?;

    let mut out = Outputs::create(&cfg.out, cfg.hash(edges_text.as_deref()))?;
    let mut first = None;
    for name in &algos {
        let r = run_exact(name, &g)?;
        out.csv(
            &format!("distances_{name}.csv"),
            &distance_matrix_csv(&r.dist),
        )?;
        out.csv(&format!("paths_{name}.csv"), &path_listing_csv(&r))?;
        first.get_or_insert(r);
    }
    let r = first.expect("at least one algorithm");
    out.write("connections.svg", &plots::connections(&pts, boundary, &g))?;
    out.write(
        "shortest_paths.svg",
        &plots::shortest_paths(&pts, boundary, &r, g.is_directed()),
    )?;
    Ok(out)
}

fn hybrid_params(cfg: &ExperimentConfig, variant: Variant) -> HybridParams {
    HybridParams {
        knn_k: cfg.knn_k,
        aco: cfg.aco.clone(),
        variant,
    }
}

/// One timed row of a race: the median report and, for ACO pipelines, the
/// convergence history of the last trial.
fn race_row(
    name: &str,
    cfg: &ExperimentConfig,
    f: &PointField,
    g: &Graph,
    route: (usize, usize),
) -> quasiroute::Result<(ComplexityReport, Option<Vec<f64>>)> {
    let trials = cfg.trials;
    match name {
        PLAIN_LISTING_LABEL => {
            let (_, r) = measure_median(name, trials, || run_plain_listing(f))?;
            Ok((r, None))
        }
        "general_fw_aco" | "modified_fw_aco" => {
            let variant = Variant::from_name(name).expect("pipeline names are validated");
            let params = hybrid_params(cfg, variant);
            let (res, r) =
                measure_median(name, trials, || run_hybrid(f, route.0, route.1, &params))?;
            Ok((r, Some(res.route.best_cost_history)))
        }
        _ => {
            let (_, r) = measure_median(name, trials, || run_exact(name, g))?;
            Ok((r, None))
        }
    }
}

fn convergence_csv(histories: &[(String, Vec<f64>)]) -> String {
    let mut out = String::from("iter");
    for (label, _) in histories {
        out.push(',');
        out.push_str(label);
    }
    out.push('\n');
    let rows = histories.iter().map(|(_, h)| h.len()).max().unwrap_or(0);
    for i in 0..rows {
        let _ = write!(out, "{}", i + 1);
        for (_, h) in histories {
            out.push(',');
            if let Some(v) = h.get(i) {
                let _ = write!(out, "{v}");
            }
        }
        out.push('\n');
    }
    out
}

/// Median-of-trials comparison of the configured algorithms on one field.
///
/// A failing algorithm is recorded as an `# error` comment row; the table is
/// still written and the command then reports the failure.
pub fn race(cfg: &ExperimentConfig) -> Result<(Outputs, String)> {
    cfg.validate()?;
    let valid: Vec<&str> = EXACT_ALGORITHMS
        .iter()
        .chain(PIPELINES.iter())
        .copied()
        .collect();
    let algos = cfg.algorithms_among(&valid, &PIPELINES)?;
    let routed = algos.iter().any(|a| a.ends_with("_aco"));
    let route = if routed {
        cfg.validate_route()?
    } else if cfg.n_points == 0 {
        return Err(CliError::invalid("race needs n_points >= 1"));
    } else {
        (0, 0)
    };
    let f = field(cfg)?;
    let g = build_complete_graph(&f)?;

    let mut reports = Vec::new();
    let mut histories = Vec::new();
    let mut failures = Vec::new();
    for name in &algos {
        match race_row(name, cfg, &f, &g, route) {
            Ok((r, h)) => {
                reports.push(r);
                if let Some(h) = h {
                    histories.push((name.clone(), h));
                }
            }
            Err(e) => failures.push((name.clone(), e)),
        }
    }

    let mut out = Outputs::create(&cfg.out, cfg.hash(None))?;
    let mut table_csv = String::new();
    let mut summary = String::new();
    if reports.is_empty() {
        table_csv.push_str(quasiroute::metrics::COMPARISON_HEADER);
        table_csv.push('\n');
    } else {
        let table = compare(&reports)?;
        table_csv = table.to_csv();
        out.write(
            "comparison.svg",
            &table.to_svg("time, storage and computation"),
        )?;
        for row in &table.rows {
            let r = &row.report;
            let _ = writeln!(
                summary,
                "{:<24} {:>12.3e} s  ratio {:.3}  relaxations {}  evaluations {}",
                r.label, r.wall_time_s, row.ratio, r.relaxation_count, r.evaluation_count
            );
        }
    }
    for (name, e) in &failures {
        let _ = writeln!(table_csv, "# error,{name},{e}");
        let _ = writeln!(summary, "{name:<24} failed: {e}");
    }
    out.csv("comparison.csv", &table_csv)?;
    out.csv("convergence.csv", &convergence_csv(&histories))?;
    if !failures.is_empty() {
        return Err(CliError::PartialFailure {
            failed: failures.len(),
            total: algos.len(),
        });
    }
    Ok((out, summary))
}

/// Route, distance matrix summary and convergence history per pipeline.
pub fn hybrid(cfg: &ExperimentConfig) -> Result<Outputs> {
    cfg.validate()?;
    let (src, dst) = cfg.validate_route()?;
    let variants = cfg
        .variants
        .clone()
        .unwrap_or_else(|| Variant::ALL.to_vec());
    let f = field(cfg)?;
    let hash = cfg.hash(None);
    let mut out = Outputs::create(&cfg.out, hash.clone())?;
    for variant in variants {
        let params = hybrid_params(cfg, variant);
        let r = run_hybrid(&f, src, dst, &params)?;
        let mut doc: serde_json::Value =
            serde_json::from_str(&r.to_json(&params)).expect("summary is valid JSON");
        if let Some(map) = doc.as_object_mut() {
            map.insert("config_hash".into(), hash.clone().into());
            map.insert("n_points".into(), cfg.n_points.into());
            map.insert("field_seed".into(), cfg.seed.into());
        }
        let name = variant.name();
        let json = serde_json::to_string_pretty(&doc).expect("value serializes") + "\n";
        out.write(&format!("hybrid_{name}.json"), &json)?;
        out.csv(&format!("convergence_{name}.csv"), &r.route.history_csv())?;
        let title = format!(
            "{name}: {} (cost {:.3})",
            quasiroute::io::format_path(&r.route.path),
            r.route.cost
        );
        out.write(
            &format!("route_{name}.svg"),
            &plots::route(f.points(), *f.boundary(), &r.route.path, &title),
        )?;
    }
    Ok(out)
}
