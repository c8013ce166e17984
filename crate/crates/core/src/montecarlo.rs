//! Random unipotent matrices and the frequency of approximate substitutions.
//!
//! Trial `t` of an experiment with seed `s` draws its matrix from a ChaCha8
//! stream keyed by `s` on stream number `t`, so any partition of the trial
//! indices across workers yields the same success count.

use core::ops::Range;

use num_traits::{Float, Pow};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::FiniteMatrix;
use crate::substitution::satisfies_substitution_condition;
use crate::{Integer, Rational};

/// Two-sided 95% normal quantile.
const Z_95: f64 = 1.959_963_984_540_054;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExperimentConfig {
    /// Matrix dimension, e.g. 4 for a 4×4 matrix.
    pub size: usize,
    pub draws: u64,
    /// Entries are drawn from `{1, ..., range}`.
    pub range: u64,
    pub seed: u64,
    /// Requested parallelism. Never affects the result.
    pub jobs: usize,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.size < 2 {
            return Err(Error::validation("size must be at least 2"));
        }
        if self.draws < 1 {
            return Err(Error::validation("draws must be at least 1"));
        }
        if self.range < 1 {
            return Err(Error::validation("range must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    pub successes: u64,
    /// `successes / draws`
    pub estimate: Rational,
    /// Wilson score interval at 95% confidence.
    pub wilson_95: (f64, f64),
    /// `r^{2n-3} / r^{n(n-1)/2}`
    pub bound: Rational,
}

impl ExperimentResult {
    pub fn from_successes(config: ExperimentConfig, successes: u64) -> Result<Self> {
        config.validate()?;
        if successes > config.draws {
            return Err(Error::validation("more successes than draws"));
        }
        Ok(ExperimentResult {
            config,
            successes,
            estimate: Rational::new(successes.into(), config.draws.into()),
            wilson_95: wilson_interval(successes, config.draws),
            bound: probability_bound(config.size, config.range)?,
        })
    }
}

/// Identity diagonal, zeros above, strictly-lower entries uniform in
/// `{1, ..., range}` drawn row by row.
pub fn random_unipotent<R: Rng + ?Sized>(size: usize, range: u64, rng: &mut R) -> FiniteMatrix {
    assert!(range >= 1, "range must be at least 1");
    let mut m = FiniteMatrix::identity(size);
    for i in 1..size {
        for k in 0..i {
            let v = rng.random_range(1..=range);
            m.set(i, k, Rational::from_integer(v.into()));
        }
    }
    m
}

/// The random stream of trial `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn run_trial(cfg: &ExperimentConfig, index: u64) -> bool {
    let m = random_unipotent(cfg.size, cfg.range, &mut trial_rng(cfg.seed, index));
    satisfies_substitution_condition(&m).expect("random matrices are unipotent")
}

/// Successes among the given trial indices.
pub fn count_successes(cfg: &ExperimentConfig, trials: Range<u64>) -> u64 {
    trials.filter(|&t| run_trial(cfg, t)).count() as u64
}

/// Sequential driver; `cfg.jobs` is ignored here.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    cfg.validate()?;
    ExperimentResult::from_successes(*cfg, count_successes(cfg, 0..cfg.draws))
}

/// Upper bound `r^{2n-3} / r^{n(n-1)/2}` on the probability that a random
/// `n × n` unipotent matrix with entries in `{1..r}` is an approximate
/// substitution.
pub fn probability_bound(size: usize, range: u64) -> Result<Rational> {
    let params = count_free_parameters(size)?;
    if range < 1 {
        return Err(Error::validation("range must be at least 1"));
    }
    let r = Integer::from(range);
    let num: Integer = Pow::pow(&r, params.determined as u64);
    let den: Integer = Pow::pow(&r, params.total as u64);
    Ok(Rational::new(num, den))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeParameters {
    /// Entries of columns 0 and 1 below the diagonal: `(n-1) + (n-2)`.
    pub determined: usize,
    /// All entries below the diagonal: `n(n-1)/2`.
    pub total: usize,
}

/// An approximate substitution is fixed by its first two columns, which
/// carry `2n - 3` free entries out of `n(n-1)/2`. For `n = 2` column 1 has
/// no entry below the diagonal, so both counts are 1.
pub fn count_free_parameters(size: usize) -> Result<FreeParameters> {
    if size < 2 {
        return Err(Error::validation("size must be at least 2"));
    }
    Ok(FreeParameters {
        determined: 2 * size - 3,
        total: size * (size - 1) / 2,
    })
}

/// Wilson score interval for `successes` out of `draws` at 95% confidence.
pub fn wilson_interval(successes: u64, draws: u64) -> (f64, f64) {
    if draws == 0 {
        return (0.0, 1.0);
    }
    let n = draws as f64;
    let p = successes as f64 / n;
    let z2 = Z_95 * Z_95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z_95 * Float::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

impl ExperimentResult {
    /// `estimate / bound`, the quantity the range-sweep probe reports.
    pub fn ratio_to_bound(&self) -> Rational {
        &self.estimate / &self.bound
    }
}
