//! Parallel driver for the random-matrix experiment.
//!
//! Trials are split into fixed chunks of indices; each trial seeds its own
//! stream from `(seed, index)`, so the success count does not depend on the
//! number of workers or on scheduling.

use normord_core::montecarlo::count_successes;
use normord_core::{run_experiment, ExperimentConfig, ExperimentResult};
use rayon::prelude::*;

const CHUNK: u64 = 256;

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Config(#[from] normord_core::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Runs `cfg.draws` trials on `cfg.jobs` threads (`0` = one per core).
pub fn run_experiment_parallel(cfg: &ExperimentConfig) -> Result<ExperimentResult, ExperimentError> {
    cfg.validate()?;
    if cfg.jobs == 1 {
        return Ok(run_experiment(cfg)?);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    let chunks = cfg.draws.div_ceil(CHUNK);
    let successes: u64 = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| count_successes(cfg, c * CHUNK..((c + 1) * CHUNK).min(cfg.draws)))
            .sum()
    });
    Ok(ExperimentResult::from_successes(*cfg, successes)?)
}
