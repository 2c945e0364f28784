//! Experiment runner for the `quasiroute` algorithms.
//!
//! Every command reads one [`ExperimentConfig`] (a JSON file, overridden by
//! flags), writes CSV and SVG files into the configured output directory, and
//! stamps each CSV with `# config-hash: <sha256>` so outputs can be traced
//! back to the configuration that produced them.

pub mod commands;
pub mod config;
pub mod error;
pub mod plots;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use quasiroute::{Boundary, Variant};

pub use config::ExperimentConfig;
pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "quasiroute",
    version,
    about = "Shortest-path experiments on random point fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Sample a point field: points.csv and a scatter plot.
    Generate,
    /// Exact all-pairs shortest paths: distance matrices, path listings, figures.
    Allpairs,
    /// Time the configured algorithms against each other.
    Race,
    /// Route src -> dst with the Floyd-Warshall + ACO pipelines.
    Hybrid,
}

/// Flags mirror config keys and override the values read from `--config`.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// JSON experiment config.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Comma-separated algorithm names.
    #[arg(long, global = true, value_delimiter = ',')]
    pub algos: Option<Vec<String>>,
    /// Comma-separated hybrid pipelines.
    #[arg(long, global = true, value_delimiter = ',')]
    pub variants: Option<Vec<String>>,
    #[arg(long = "n-points", short = 'n', global = true)]
    pub n_points: Option<usize>,
    /// x_min,x_max,y_min,y_max
    #[arg(
        long,
        global = true,
        value_delimiter = ',',
        num_args = 4,
        allow_negative_numbers = true
    )]
    pub boundary: Option<Vec<f64>>,
    #[arg(long, global = true)]
    pub src: Option<usize>,
    #[arg(long, global = true)]
    pub dst: Option<usize>,
    #[arg(long = "knn-k", global = true)]
    pub knn_k: Option<usize>,
    /// Edge-list CSV (u,v,w) used by `allpairs` instead of a point field.
    #[arg(long, global = true)]
    pub edges: Option<PathBuf>,
    #[arg(long, global = true)]
    pub directed: Option<bool>,
}

impl Flags {
    /// The config file (or defaults) with every given flag applied.
    pub fn resolve(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = &self.out {
            cfg.out = v.clone();
        }
        if let Some(v) = self.trials {
            cfg.trials = v;
        }
        if let Some(v) = &self.algos {
            cfg.algorithms = Some(v.clone());
        }
        if let Some(names) = &self.variants {
            let variants = names
                .iter()
                .map(|n| {
                    Variant::from_name(n).ok_or_else(|| {
                        let valid: Vec<_> = Variant::ALL.iter().map(|v| v.name()).collect();
                        CliError::invalid(format!(
                            "unknown variant '{n}'; valid names: {}",
                            valid.join(", ")
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            cfg.variants = Some(variants);
        }
        if let Some(v) = self.n_points {
            cfg.n_points = v;
        }
        if let Some(b) = &self.boundary {
            cfg.boundary = Boundary::new(b[0], b[1], b[2], b[3])
                .map_err(|e| CliError::invalid(e.to_string()))?;
        }
        if let Some(v) = self.src {
            cfg.src = v;
        }
        if let Some(v) = self.dst {
            cfg.dst = Some(v);
        }
        if let Some(v) = self.knn_k {
            cfg.knn_k = Some(v);
        }
        if let Some(v) = &self.edges {
            cfg.edges = Some(v.clone());
        }
        if let Some(v) = self.directed {
            cfg.directed = v;
        }
        Ok(cfg)
    }
}

/// Runs `command` and returns the text to print on success.
pub fn run(command: Command, cfg: &ExperimentConfig) -> Result<String> {
    let (outputs, mut text) = match command {
        Command::Generate => (commands::generate(cfg)?, String::new()),
        Command::Allpairs => (commands::allpairs(cfg)?, String::new()),
        Command::Race => commands::race(cfg)?,
        Command::Hybrid => (commands::hybrid(cfg)?, String::new()),
    };
    for f in &outputs.files {
        text.push_str(&format!("wrote {}\n", f.display()));
    }
    Ok(text)
}
