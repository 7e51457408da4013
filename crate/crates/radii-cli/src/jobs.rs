//! Batch configuration and the bounded-pool table runner.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::Deserialize;

use radii_core::solver::{solve_radius, RadiusProblem};
use radii_core::{certify, CertifyOptions, SeriesConfig};

use crate::output::JobOutcome;

fn default_tol() -> f64 {
    1e-12
}

fn default_epsilon() -> f64 {
    1e-3
}

fn default_angles() -> usize {
    256
}

fn default_oracle_step() -> f64 {
    1e-4
}

/// Output format shared by the `--format` flags and the config file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub jobs: Vec<RadiusProblem>,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default)]
    pub certify: bool,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "default_angles")]
    pub n_angles: usize,
    #[serde(default = "default_oracle_step")]
    pub oracle_step: f64,
    #[serde(default)]
    pub output: Option<Format>,
    #[serde(default)]
    pub out_path: Option<PathBuf>,
}

/// Run every job; output rows keep the input order regardless of which
/// worker finished first. Per-job failures become rows, not process
/// failures.
pub fn run_table(
    config: &JobConfig,
    threads: Option<usize>,
    cfg: &SeriesConfig,
) -> Result<Vec<JobOutcome>, String> {
    let opts = CertifyOptions {
        epsilon: config.epsilon,
        n_angles: config.n_angles,
        oracle_step: config.oracle_step,
    };
    let work = |problem: &RadiusProblem| -> JobOutcome {
        let outcome = solve_radius(problem, config.tol, cfg).and_then(|result| {
            if config.certify {
                certify(problem, result.radius, &opts, cfg).map(|c| (result, Some(c)))
            } else {
                Ok((result, None))
            }
        });
        JobOutcome {
            problem: problem.clone(),
            outcome,
        }
    };
    let run = || config.jobs.par_iter().map(work).collect::<Vec<_>>();
    match threads {
        None => Ok(run()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| format!("cannot build worker pool: {e}"))?;
            Ok(pool.install(run))
        }
    }
}
