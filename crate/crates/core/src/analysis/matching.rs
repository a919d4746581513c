//! Appearances of a configuration in a patch.
//!
//! Backtracking over the configuration's breadth-first order: each face
//! after the first is placed on a neighbor of its parent's image, and every
//! placement must agree with all earlier ones on side count and on
//! adjacency, both ways. Faces with clipped neighborhoods are never used.

use std::collections::BTreeSet;

use super::config::Configuration;
use crate::tiling::TilingPatch;

/// Up to `limit` copies, one per distinct image set; `map[i]` is the image
/// of configuration face `i`.
pub fn find_copies(patch: &TilingPatch, config: &Configuration, limit: usize) -> Vec<Vec<usize>> {
    let order = config.bfs_order();
    if order.len() != config.len() || limit == 0 {
        return vec![];
    }
    let mut found = Vec::new();
    let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut map = vec![usize::MAX; config.len()];
    let mut used = BTreeSet::new();
    let first = order[0].0;
    for anchor in 0..patch.len() {
        if patch.sides(anchor) != config.faces[first].sides || patch.is_clipped(anchor) {
            continue;
        }
        map[first] = anchor;
        used.insert(anchor);
        extend(
            patch,
            config,
            &order,
            1,
            &mut map,
            &mut used,
            &mut images,
            &mut found,
            limit,
        );
        used.remove(&anchor);
        if found.len() >= limit {
            break;
        }
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn extend(
    patch: &TilingPatch,
    config: &Configuration,
    order: &[(usize, Option<usize>)],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut BTreeSet<usize>,
    images: &mut BTreeSet<Vec<usize>>,
    found: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    if depth == order.len() {
        let mut key = map.clone();
        key.sort_unstable();
        if images.insert(key) {
            found.push(map.clone());
        }
        return;
    }
    let (f, parent) = order[depth];
    let parent = parent.expect("non-root faces have parents");
    let candidates: Vec<usize> = patch.neighbors(map[parent]).to_vec();
    for c in candidates {
        if used.contains(&c) || patch.sides(c) != config.faces[f].sides || patch.is_clipped(c) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&(g, _)| config.adjacent(f, g) == patch.are_adjacent(c, map[g]));
        if !consistent {
            continue;
        }
        map[f] = c;
        used.insert(c);
        extend(
            patch,
            config,
            order,
            depth + 1,
            map,
            used,
            images,
            found,
            limit,
        );
        used.remove(&c);
        map[f] = usize::MAX;
    }
}

/// Re-checks one map against the appearance definition.
pub fn is_appearance(patch: &TilingPatch, config: &Configuration, map: &[usize]) -> bool {
    let n = config.len();
    let distinct: BTreeSet<_> = map.iter().collect();
    map.len() == n
        && distinct.len() == n
        && (0..n).all(|i| patch.sides(map[i]) == config.faces[i].sides)
        && (0..n).all(|i| {
            (0..n).all(|j| i == j || config.adjacent(i, j) == patch.are_adjacent(map[i], map[j]))
        })
}
