//! Blocking sets: every face has at most `k` neighbors outside the set, so
//! if the set starts healthy it stays healthy under (k+1)-bootstrap.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tiling::TilingPatch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingReport {
    pub ok: bool,
    pub max_external: u32,
}

pub fn external_neighbors(patch: &TilingPatch, set: &BTreeSet<usize>, f: usize) -> u32 {
    patch
        .neighbors(f)
        .iter()
        .filter(|g| !set.contains(g))
        .count() as u32
}

pub fn verify_blocking(patch: &TilingPatch, faces: &[usize], k: u32) -> Result<BlockingReport> {
    if faces.is_empty() {
        return Err(Error::EmptyFaceSet);
    }
    let set: BTreeSet<usize> = faces.iter().copied().collect();
    let mut max_external = 0;
    for &f in &set {
        if f >= patch.len() {
            return Err(Error::FaceOutOfRange(f, patch.len()));
        }
        if patch.is_clipped(f) {
            return Err(Error::ClippedNeighborhood(f));
        }
        max_external = max_external.max(external_neighbors(patch, &set, f));
    }
    Ok(BlockingReport {
        ok: max_external <= k,
        max_external,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{build_archimedean, Extent, Family, Topology};

    #[test]
    fn hexagon_flower_and_single_hexagon() {
        let p = build_archimedean(
            Family::Hex,
            Extent::Cells {
                width: 6,
                height: 6,
            },
            Topology::Torus,
        )
        .unwrap();
        let mut flower = vec![0];
        flower.extend(p.neighbors(0));
        let r = verify_blocking(&p, &flower, 3).unwrap();
        assert_eq!(
            r,
            BlockingReport {
                ok: true,
                max_external: 3
            }
        );
        let r = verify_blocking(&p, &[0], 3).unwrap();
        assert_eq!(
            r,
            BlockingReport {
                ok: false,
                max_external: 6
            }
        );
    }

    #[test]
    fn four_squares_at_a_vertex() {
        let p = build_archimedean(
            Family::Square,
            Extent::Cells {
                width: 5,
                height: 5,
            },
            Topology::Torus,
        )
        .unwrap();
        let r = verify_blocking(&p, &[0, 1, 5, 6], 2).unwrap();
        assert!(r.ok);
        assert!(!verify_blocking(&p, &[0, 1, 5, 6], 1).unwrap().ok);
    }

    #[test]
    fn clipped_and_empty_rejected() {
        let p = build_archimedean(Family::Hex, Extent::Radius { t: 1 }, Topology::Open).unwrap();
        let petal = (0..p.len()).find(|&f| p.is_clipped(f)).unwrap();
        assert_eq!(
            verify_blocking(&p, &[petal], 3),
            Err(Error::ClippedNeighborhood(petal))
        );
        assert_eq!(verify_blocking(&p, &[], 3), Err(Error::EmptyFaceSet));
    }
}
