//! How one infected face on the top side of a ring spreads along it.

use serde::{Deserialize, Serialize};

use crate::engine::{run_bootstrap, seed_explicit};
use crate::error::{Error, Result};
use crate::tiling::{ring_decomposition, Family, TilingPatch};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowReplay {
    pub family: Family,
    pub k: u32,
    pub t: u32,
    pub patch: TilingPatch,
    /// The extra face on the top side; everything else seeded is `core(t)`.
    pub seed: usize,
    pub initial: Vec<usize>,
    pub rounds: Vec<Option<u32>>,
}

impl RowReplay {
    /// Face nearest to `offset` from the seed's center, if within `tol`.
    pub fn face_at(&self, offset: [f64; 2], tol: f64) -> Option<usize> {
        let c = self.patch.faces[self.seed].center;
        let target = [c[0] + offset[0], c[1] + offset[1]];
        (0..self.patch.len())
            .map(|f| {
                let p = self.patch.faces[f].center;
                (f, (p[0] - target[0]).hypot(p[1] - target[1]))
            })
            .filter(|&(_, d)| d <= tol)
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(f, _)| f)
    }
}

fn primary_sides(family: Family) -> Result<u32> {
    match family {
        Family::Hex | Family::Kagome => Ok(6),
        Family::TruncatedTrihex => Ok(12),
        other => Err(Error::UnsupportedFamily(other.to_string())),
    }
}

/// `core(t)` infected plus the top-side primary face closest to the
/// vertical axis, run at the family's threshold.
pub fn row_growth_replay(family: Family, t: u32) -> Result<RowReplay> {
    let primary = primary_sides(family)?;
    let ring = ring_decomposition(&family.into(), t)?;
    let patch = &ring.patch;
    let top = ring
        .sides()
        .max_by(|a, b| {
            let y = |g: &crate::tiling::RingGroup| {
                g.faces
                    .iter()
                    .map(|&f| patch.faces[f].center[1])
                    .fold(f64::MIN, f64::max)
            };
            y(a).total_cmp(&y(b))
        })
        .ok_or_else(|| Error::InvalidPatch("ring has no sides".into()))?;
    let seed = top
        .faces
        .iter()
        .copied()
        .filter(|&f| patch.sides(f) == primary)
        .min_by(|&a, &b| {
            patch.faces[a].center[0]
                .abs()
                .total_cmp(&patch.faces[b].center[0].abs())
        })
        .ok_or_else(|| Error::InvalidPatch("top side has no primary face".into()))?;
    let mut initial = ring.core.clone();
    initial.push(seed);
    let k = family.threshold();
    let (state, _) = run_bootstrap(patch, seed_explicit(patch, &initial)?, k)?;
    Ok(RowReplay {
        family,
        k,
        t,
        patch: ring.patch.clone(),
        seed,
        initial,
        rounds: state.round,
    })
}
