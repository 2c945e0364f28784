//! The experiment description shared by every command.

use std::fs;
use std::path::{Path, PathBuf};

use quasiroute::{AcoParams, Boundary, Variant};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

/// Exact all-pairs / single-source algorithms.
pub const EXACT_ALGORITHMS: [&str; 5] = [
    "floyd_warshall",
    "modified_floyd_warshall",
    "johnson",
    "bellman_ford",
    "dijkstra",
];

/// Timed pipelines over a point field.
pub const PIPELINES: [&str; 3] = ["plain_fw_listing", "general_fw_aco", "modified_fw_aco"];

/// One JSON document fully describing an experiment. Missing keys take their
/// defaults; unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n_points: usize,
    pub boundary: Boundary,
    /// Seed of the point field.
    pub seed: u64,
    /// Algorithms to run; `None` picks the command's default set.
    pub algorithms: Option<Vec<String>>,
    /// Pipelines for the `hybrid` command; `None` runs both.
    pub variants: Option<Vec<Variant>>,
    pub aco: AcoParams,
    /// Sparsification degree of the modified pipeline; `None` uses the default.
    pub knn_k: Option<usize>,
    pub src: usize,
    /// Route destination; `None` means the last point.
    pub dst: Option<usize>,
    pub trials: usize,
    /// Edge-list CSV replacing the point field in `allpairs`.
    pub edges: Option<PathBuf>,
    /// Whether `edges` lists directed arcs.
    pub directed: bool,
    /// Output directory. Not part of the config hash.
    pub out: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            n_points: 10,
            boundary: Boundary::default(),
            seed: 42,
            algorithms: None,
            variants: None,
            aco: AcoParams::default(),
            knn_k: None,
            src: 0,
            dst: None,
            trials: 5,
            edges: None,
            directed: true,
            out: PathBuf::from("out"),
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::invalid(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn dst_or_last(&self) -> usize {
        self.dst.unwrap_or(self.n_points.saturating_sub(1))
    }

    /// Field-level checks shared by every command.
    pub fn validate(&self) -> Result<()> {
        self.boundary
            .validate()
            .map_err(|e| CliError::invalid(e.to_string()))?;
        if self.trials == 0 {
            return Err(CliError::invalid("trials must be >= 1"));
        }
        self.aco
            .validate()
            .map_err(|e| CliError::invalid(format!("aco: {e}")))?;
        if let Some(a) = &self.algorithms {
            if a.is_empty() {
                return Err(CliError::invalid("algorithms must not be empty"));
            }
        }
        if let Some(v) = &self.variants {
            if v.is_empty() {
                return Err(CliError::invalid("variants must not be empty"));
            }
        }
        Ok(())
    }

    /// The configured algorithm names, or `default`, each checked against `valid`.
    pub fn algorithms_among(&self, valid: &[&str], default: &[&str]) -> Result<Vec<String>> {
        let names = match &self.algorithms {
            Some(a) => a.clone(),
            None => default.iter().map(|s| s.to_string()).collect(),
        };
        for name in &names {
            if !valid.contains(&name.as_str()) {
                return Err(CliError::invalid(format!(
                    "unknown algorithm '{name}'; valid names: {}",
                    valid.join(", ")
                )));
            }
        }
        Ok(names)
    }

    /// Checks `src`/`dst` against the field size for route-producing commands.
    pub fn validate_route(&self) -> Result<(usize, usize)> {
        let n = self.n_points;
        let (src, dst) = (self.src, self.dst_or_last());
        if n < 2 {
            return Err(CliError::invalid("routing needs n_points >= 2"));
        }
        if src >= n || dst >= n {
            return Err(CliError::invalid(format!(
                "src {src} and dst {dst} must be below n_points = {n}"
            )));
        }
        if src == dst {
            return Err(CliError::invalid("src and dst must differ"));
        }
        if let Some(k) = self.knn_k {
            if k == 0 || k >= n {
                return Err(CliError::invalid(format!(
                    "knn_k = {k} must satisfy 1 <= k < n_points = {n}"
                )));
            }
        }
        Ok((src, dst))
    }

    /// SHA-256 over the canonical JSON of every key except `out`, followed by
    /// the bytes of the edge-list input if one is configured.
    pub fn hash(&self, edges: Option<&str>) -> String {
        let mut value = serde_json::to_value(self).expect("config is serializable");
        if let Some(map) = value.as_object_mut() {
            map.remove("out");
        }
        let mut hasher = Sha256::new();
        hasher.update(value.to_string().as_bytes());
        if let Some(text) = edges {
            hasher.update(b"\n");
            hasher.update(text.as_bytes());
        }
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}
