//! Time, storage and computation accounting for algorithm runs.
//!
//! Wall time comes from a monotonic clock around the run. Storage is analytic:
//! the dimensions of the dense structures an algorithm holds multiplied by
//! [`ENTRY_BYTES`](crate::graph::ENTRY_BYTES). Computation is the exact number of
//! relaxation checks (exact algorithms) or candidate/objective evaluations
//! (swarm methods) performed.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::svg::{self, Svg};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub label: String,
    pub wall_time_s: f64,
    pub storage_bytes: u64,
    pub relaxation_count: u64,
    pub evaluation_count: u64,
}

impl ComplexityReport {
    pub fn new(label: impl Into<String>) -> Self {
        ComplexityReport {
            label: label.into(),
            ..Default::default()
        }
    }

    /// Adds counters and storage of `other`; wall times add too.
    pub fn absorb(&mut self, other: &ComplexityReport) {
        self.wall_time_s += other.wall_time_s;
        self.storage_bytes += other.storage_bytes;
        self.relaxation_count += other.relaxation_count;
        self.evaluation_count += other.evaluation_count;
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Same report with the wall time zeroed, for comparing deterministic fields.
    pub fn without_timing(&self) -> Self {
        ComplexityReport {
            wall_time_s: 0.0,
            ..self.clone()
        }
    }
}

/// Anything that carries its own counters.
pub trait Instrumented {
    fn report(&self) -> &ComplexityReport;
}

/// Runs `f` once under a monotonic clock.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

/// Runs an instrumented operation and returns its output with a report whose
/// wall time covers the whole call.
pub fn measure<T: Instrumented>(
    label: &str,
    f: impl FnOnce() -> Result<T>,
) -> Result<(T, ComplexityReport)> {
    let (out, secs) = timed(f);
    let out = out?;
    let mut report = out.report().clone().with_label(label);
    report.wall_time_s = secs;
    Ok((out, report))
}

/// One warm-up call, then `trials` timed calls; reports the median wall time.
///
/// Counters come from the last trial. Deterministic operations produce the
/// same counters in every trial.
pub fn measure_median<T: Instrumented>(
    label: &str,
    trials: usize,
    mut f: impl FnMut() -> Result<T>,
) -> Result<(T, ComplexityReport)> {
    if trials == 0 {
        return Err(Error::param("trials must be >= 1"));
    }
    f()?;
    let mut times = Vec::with_capacity(trials);
    let mut last = None;
    for _ in 0..trials {
        let (out, report) = measure(label, &mut f)?;
        times.push(report.wall_time_s);
        last = Some((out, report));
    }
    let (out, mut report) = last.expect("trials >= 1");
    report.wall_time_s = median(&mut times);
    Ok((out, report))
}

pub fn median(values: &mut [f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub report: ComplexityReport,
    /// Wall time relative to the slowest row.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
}

pub const COMPARISON_HEADER: &str =
    "label,wall_time_s,storage_bytes,relaxation_count,evaluation_count,ratio";

/// Sorts reports by wall time (stable) and normalizes against the slowest.
pub fn compare(reports: &[ComplexityReport]) -> Result<ComparisonTable> {
    if reports.is_empty() {
        return Err(Error::param("compare needs at least one report"));
    }
    let slowest = reports
        .iter()
        .map(|r| r.wall_time_s)
        .fold(0.0_f64, f64::max);
    let mut rows: Vec<ComparisonRow> = reports
        .iter()
        .map(|r| ComparisonRow {
            report: r.clone(),
            ratio: if slowest > 0.0 {
                r.wall_time_s / slowest
            } else {
                1.0
            },
        })
        .collect();
    rows.sort_by(|a, b| a.report.wall_time_s.total_cmp(&b.report.wall_time_s));
    Ok(ComparisonTable { rows })
}

/// Axis label and extractor of one bar group.
type Metric = (&'static str, fn(&ComplexityReport) -> f64);

impl ComparisonTable {
    pub fn labels(&self) -> Vec<&str> {
        self.rows.iter().map(|r| r.report.label.as_str()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(COMPARISON_HEADER);
        out.push('\n');
        for row in &self.rows {
            let r = &row.report;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.label,
                r.wall_time_s,
                r.storage_bytes,
                r.relaxation_count,
                r.evaluation_count,
                row.ratio
            );
        }
        out
    }

    /// Grouped bars: one group per metric, one bar per algorithm, each group
    /// normalized to its own maximum.
    pub fn to_svg(&self, title: &str) -> String {
        let metrics: [Metric; 3] = [
            ("time (s)", |r| r.wall_time_s),
            ("storage (bytes)", |r| r.storage_bytes as f64),
            ("computation (ops)", |r| {
                (r.relaxation_count + r.evaluation_count) as f64
            }),
        ];
        let (w, h) = (720.0, 420.0);
        let (left, bottom, top) = (60.0, 60.0, 50.0);
        let plot_h = h - bottom - top;
        let group_w = (w - left - 20.0) / metrics.len() as f64;
        let bars = self.rows.len().max(1) as f64;
        let bar_w = group_w * 0.8 / bars;
        let mut doc = Svg::new(w, h);
        doc.text(w / 2.0, 25.0, 16.0, "middle", title);
        doc.line(left, h - bottom, w - 10.0, h - bottom, "#000", 1.0);
        for (g, (name, value)) in metrics.iter().enumerate() {
            let max = self
                .rows
                .iter()
                .map(|r| value(&r.report))
                .fold(0.0, f64::max);
            let x0 = left + g as f64 * group_w + group_w * 0.1;
            for (i, row) in self.rows.iter().enumerate() {
                let v = value(&row.report);
                let bh = if max > 0.0 { plot_h * v / max } else { 0.0 };
                let x = x0 + i as f64 * bar_w;
                doc.rect(x, h - bottom - bh, bar_w * 0.9, bh, svg::color(i));
                doc.text(
                    x + bar_w * 0.45,
                    h - bottom - bh - 4.0,
                    9.0,
                    "middle",
                    &format!("{v:.3e}"),
                );
            }
            doc.text(x0 + group_w * 0.4, h - bottom + 18.0, 12.0, "middle", name);
        }
        for (i, row) in self.rows.iter().enumerate() {
            let y = h - 22.0;
            let x = left + i as f64 * 200.0;
            doc.rect(x, y - 9.0, 10.0, 10.0, svg::color(i));
            doc.text(x + 14.0, y, 11.0, "start", &row.report.label);
        }
        doc.finish()
    }
}
