//! Coupled experiments on transformed patches.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::montecarlo::{monte_carlo_estimate, Estimate};
use crate::engine::{run_bootstrap, seed_explicit, seed_random, trial_seed};
use crate::error::{Error, Result};
use crate::tiling::{
    build, build_archimedean, inflate_3_12_12, Extent, Family, LatticeSpec, TilingPatch, Topology,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InflationReport {
    pub dodecagons: usize,
    pub p: f64,
    pub trials: u64,
    pub master_seed: u64,
    pub hex_percolated: u64,
    pub original_percolated: u64,
    /// Trials where some hexagon ended infected but its 12-gon did not.
    pub violations: u64,
}

impl InflationReport {
    pub fn consistent(&self) -> bool {
        self.violations == 0 && self.hex_percolated <= self.original_percolated
    }
}

/// One coupled trial: the 12-gon part of the seed, pushed to the hexagonal
/// image, against the full seed on the original. Returns
/// `(hex percolates, original percolates, containment holds)`.
fn coupled(
    patch: &TilingPatch,
    hex: &TilingPatch,
    image: &[usize],
    state: crate::engine::InfectionState,
    k: u32,
) -> Result<(bool, bool, bool)> {
    let on_hex: Vec<usize> = (0..image.len())
        .filter(|&d| state.infected[image[d]])
        .collect();
    let (h, ho) = run_bootstrap(hex, seed_explicit(hex, &on_hex)?, k)?;
    let (o, oo) = run_bootstrap(patch, state, k)?;
    let contained = (0..image.len()).all(|d| !h.infected[d] || o.infected[image[d]]);
    Ok((ho.percolated, oo.percolated, contained))
}

pub fn inflation_consistency_check(
    patch: &TilingPatch,
    p: f64,
    k: u32,
    trials: u64,
    master_seed: u64,
) -> Result<InflationReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let (hex, image) = inflate_3_12_12(patch)?;
    let results = (0..trials)
        .into_par_iter()
        .map(|i| {
            coupled(
                patch,
                &hex,
                &image,
                seed_random(patch, p, trial_seed(master_seed, i))?,
                k,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let count = |f: fn(&(bool, bool, bool)) -> bool| results.iter().filter(|r| f(r)).count() as u64;
    Ok(InflationReport {
        dodecagons: image.len(),
        p,
        trials,
        master_seed,
        hex_percolated: count(|r| r.0),
        original_percolated: count(|r| r.1),
        violations: count(|r| r.0 && !r.1 || !r.2),
    })
}

/// `count` pairwise non-adjacent hexagons spread through the index range
/// of a hexagonal patch.
pub fn spread_substitutions(hex: &TilingPatch, count: usize) -> Result<Vec<usize>> {
    let n = hex.len();
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    if count == 0 {
        return Ok(Vec::new());
    }
    let stride = (n / count).max(1);
    let mut start = stride / 2;
    while chosen.len() < count && start < n + stride {
        for f in (start % n..n).chain(0..start % n) {
            if !chosen.contains(&f) && hex.neighbors(f).iter().all(|g| !chosen.contains(g)) {
                chosen.insert(f);
                break;
            }
        }
        start += stride;
    }
    if chosen.len() < count {
        return Err(Error::InvalidConfiguration(format!(
            "cannot place {count} isolated substitutions in {n} hexagons"
        )));
    }
    Ok(chosen.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModifiedHexRow {
    pub p: f64,
    pub modified: Estimate,
    pub control: Estimate,
    /// Probability that every substituted hexagon has an initially infected
    /// triangle: `(1 - (1-p)^6)^n`. Without one the six triangles each have
    /// a single outside neighbor and never reach two.
    pub local_prediction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModifiedHexReport {
    pub extent: Extent,
    pub k: u32,
    pub substitutions: Vec<usize>,
    pub rows: Vec<ModifiedHexRow>,
}

pub fn modified_hex_experiment(
    extent: Extent,
    substitutions: usize,
    k: u32,
    p_grid: &[f64],
    trials: u64,
    master_seed: u64,
) -> Result<ModifiedHexReport> {
    let control = build_archimedean(Family::Hex, extent, Topology::Torus)?;
    let targets = spread_substitutions(&control, substitutions)?;
    let modified = build(
        &LatticeSpec::ModifiedHex {
            substitutions: targets.clone(),
        },
        extent,
        Topology::Torus,
    )?;
    let rows = p_grid
        .iter()
        .map(|&p| {
            Ok(ModifiedHexRow {
                p,
                modified: monte_carlo_estimate(&modified, p, k, trials, master_seed)?,
                control: monte_carlo_estimate(&control, p, k, trials, master_seed)?,
                local_prediction: (1.0 - (1.0 - p).powi(6)).powi(targets.len() as i32),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModifiedHexReport {
        extent,
        k,
        substitutions: targets,
        rows,
    })
}
