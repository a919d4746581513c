//! Percolation frequency over independent trials.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{run_trial, trial_seed};
use crate::error::{Error, Result};
use crate::tiling::{Extent, TilingPatch};

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959963984540054;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub lattice: String,
    pub extent: Extent,
    pub faces: usize,
    pub p: f64,
    pub k: u32,
    pub trials: u64,
    pub percolated: u64,
    pub frequency: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub master_seed: u64,
}

/// Wilson score interval for `hits` out of `n`.
pub fn wilson_interval(hits: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let phat = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The bounds touch 0 and 1 exactly at the extremes; rounding would not.
    let lo = if hits == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let hi = if phat == 1.0 {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo, hi)
}

/// Trial `i` seeds from `trial_seed(master_seed, i)`, so the result does not
/// depend on how many threads run it.
pub fn monte_carlo_estimate(
    patch: &TilingPatch,
    p: f64,
    k: u32,
    trials: u64,
    master_seed: u64,
) -> Result<Estimate> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(patch, p, k, trial_seed(master_seed, i)).map(|o| o.percolated as u64))
        .collect::<Result<Vec<u64>>>()?;
    let percolated: u64 = outcomes.iter().sum();
    let (ci_low, ci_high) = wilson_interval(percolated, trials, Z95);
    Ok(Estimate {
        lattice: patch.spec.to_string(),
        extent: patch.extent,
        faces: patch.len(),
        p,
        k,
        trials,
        percolated,
        frequency: percolated as f64 / trials as f64,
        ci_low,
        ci_high,
        master_seed,
    })
}
