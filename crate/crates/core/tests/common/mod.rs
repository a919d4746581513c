#![allow(dead_code)]

use std::collections::BTreeSet;

use percolattice::tiling::{build_archimedean, Extent, Family, TilingPatch, Topology};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A connected patch of `1..=max` faces cut from a random Archimedean torus
/// by growing from one face in random order.
pub fn random_small_patch(seed: u64, max: usize) -> TilingPatch {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let family = *Family::ALL.choose(&mut rng).unwrap();
    let base = build_archimedean(
        family,
        Extent::Cells {
            width: 4,
            height: 4,
        },
        Topology::Torus,
    )
    .unwrap();
    let target = rng.gen_range(1..=max.min(base.len()));
    let mut keep = BTreeSet::from([rng.gen_range(0..base.len())]);
    while keep.len() < target {
        let frontier: Vec<usize> = keep
            .iter()
            .flat_map(|&f| base.neighbors(f).iter().copied())
            .filter(|g| !keep.contains(g))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        keep.insert(*frontier.choose(&mut rng).unwrap());
    }
    base.induced(&keep).0
}

pub fn random_mask(n: usize, p: f64, seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_bool(p)).collect()
}

pub fn faces_of(mask: &[bool]) -> Vec<usize> {
    (0..mask.len()).filter(|&f| mask[f]).collect()
}

/// Asynchronous dynamics: one face at a time in a shuffled order, until a
/// full pass changes nothing.
pub fn sequential_closure(patch: &TilingPatch, initial: &[bool], k: u32, seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = initial.to_vec();
    let mut order: Vec<usize> = (0..patch.len()).collect();
    loop {
        order.shuffle(&mut rng);
        let mut changed = false;
        for &f in &order {
            if !cur[f] && patch.neighbors(f).iter().filter(|&&g| cur[g]).count() as u32 >= k {
                cur[f] = true;
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}
