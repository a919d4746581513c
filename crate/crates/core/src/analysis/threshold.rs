//! Empirical threshold: the largest `k` whose percolation frequency on the
//! largest extent stays at or above one half.

use serde::{Deserialize, Serialize};

use super::montecarlo::{monte_carlo_estimate, Estimate};
use crate::error::{Error, Result};
use crate::tiling::{build, Extent, LatticeSpec, TilingPatch, Topology};

/// Frequencies in this band on the largest extent are flagged.
pub const INCONCLUSIVE_BAND: (f64, f64) = (0.4, 0.6);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdEstimate {
    pub lattice: String,
    pub p: f64,
    pub k_hat: u32,
    pub inconclusive: bool,
    /// Whether, at `k_hat` and `k_hat + 1`, the frequency moves away from one
    /// half as the extent grows.
    pub trend_away_from_half: bool,
    pub rows: Vec<Estimate>,
}

impl ThresholdEstimate {
    pub fn frequency(&self, k: u32, extent: &Extent) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.k == k && r.extent == *extent)
            .map(|r| r.frequency)
    }
}

/// Every `(k, extent)` pair shares `master_seed`, so for a fixed extent the
/// initial sets coincide across `k` and the frequencies are monotone.
pub fn estimate_threshold(
    spec: &LatticeSpec,
    p: f64,
    extents: &[Extent],
    trials: u64,
    master_seed: u64,
) -> Result<ThresholdEstimate> {
    if extents.is_empty() {
        return Err(Error::InvalidExtent("no extents".into()));
    }
    let patches = extents
        .iter()
        .map(|&e| build(spec, e, Topology::Torus))
        .collect::<Result<Vec<TilingPatch>>>()?;
    estimate_threshold_on(&spec.to_string(), &patches, p, trials, master_seed)
}

/// As [`estimate_threshold`] on prebuilt patches, smallest first.
pub fn estimate_threshold_on(
    lattice: &str,
    patches: &[TilingPatch],
    p: f64,
    trials: u64,
    master_seed: u64,
) -> Result<ThresholdEstimate> {
    if patches.is_empty() {
        return Err(Error::InvalidExtent("no extents".into()));
    }
    let max_k = patches.iter().map(|q| q.max_degree()).max().unwrap_or(0) as u32 + 1;
    let mut rows = Vec::new();
    let mut last_freqs: Vec<(u32, f64, f64)> = Vec::new();
    for k in 1..=max_k {
        let mut first = None;
        let mut last = 0.0;
        for q in patches {
            let e = monte_carlo_estimate(q, p, k, trials, master_seed)?;
            first.get_or_insert(e.frequency);
            last = e.frequency;
            rows.push(e);
        }
        last_freqs.push((k, first.unwrap_or(last), last));
        if last < 0.5 {
            break;
        }
    }
    let k_hat = last_freqs
        .iter()
        .filter(|(_, _, f)| *f >= 0.5)
        .map(|(k, _, _)| *k)
        .max()
        .unwrap_or(0);
    let relevant: Vec<_> = last_freqs
        .iter()
        .filter(|(k, _, _)| *k == k_hat || *k == k_hat + 1)
        .collect();
    let inconclusive = relevant
        .iter()
        .any(|(_, _, f)| *f > INCONCLUSIVE_BAND.0 && *f < INCONCLUSIVE_BAND.1);
    let trend_away_from_half = patches.len() < 2
        || relevant
            .iter()
            .all(|(_, a, b)| (b - 0.5).abs() + 1e-12 >= (a - 0.5).abs());
    Ok(ThresholdEstimate {
        lattice: lattice.to_string(),
        p,
        k_hat,
        inconclusive,
        trend_away_from_half,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::Family;

    #[test]
    fn square_lattice_is_two() {
        let ext = [
            Extent::Cells {
                width: 10,
                height: 10,
            },
            Extent::Cells {
                width: 20,
                height: 20,
            },
        ];
        let t = estimate_threshold(&Family::Square.into(), 0.5, &ext, 40, 3).unwrap();
        assert_eq!(t.k_hat, 2);
        assert!(!t.inconclusive);
        // Coupled seeds: frequency never rises with k.
        for e in &ext {
            let f: Vec<f64> = (1..=3).filter_map(|k| t.frequency(k, e)).collect();
            assert!(f.windows(2).all(|w| w[0] >= w[1]), "{f:?}");
        }
    }
}
