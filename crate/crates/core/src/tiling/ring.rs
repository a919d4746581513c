//! Nested growth regions and their rings.
//!
//! (4.8.8): `core(t)` holds the octagons with `max(|i|, |j|) <= t` and the
//! squares strictly between them. The ring `core(t+1) \ core(t)` splits into
//! four sides and four corners.
//!
//! (6.6.6), (3.6.3.6), (4.6.12): `core(t)` is the hex-distance ball of radius
//! `t` in the lattice of primary faces (hexagons, or 12-gons for 4.6.12),
//! plus every secondary face enough of whose primary neighbors lie in the
//! ball. Ring primaries sit on a hexagonal ring with six corners.
//!
//! Strips: `core(t)` spans rows `-t..=t` around a non-triangular face on
//! row 0, keeping non-triangular faces centered within `2t` of it and the
//! triangles between two kept hexagons.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Signed;

use super::archimedean::template;
use super::patch::{Extent, Family, LatticeSpec, TilingPatch};
use super::strips::{Piece, StripFace, StripPlane, StripSequence, Q};
use super::template::{FaceKey, Window};
use crate::engine::{run_bootstrap, seed_explicit};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RingGroup {
    pub label: String,
    pub corner: bool,
    pub faces: Vec<usize>,
    /// Faces whose single infection should fill the group.
    pub seedable: Vec<usize>,
}

/// A ring decomposition realized on the open window `core(t+2)`.
#[derive(Debug, Clone)]
pub struct RingSpec {
    pub family: LatticeSpec,
    pub t: u32,
    pub patch: TilingPatch,
    pub core: Vec<usize>,
    /// `core(t+1)`.
    pub next: Vec<usize>,
    pub groups: Vec<RingGroup>,
}

impl RingSpec {
    pub fn sides(&self) -> impl Iterator<Item = &RingGroup> {
        self.groups.iter().filter(|g| !g.corner)
    }

    pub fn corners(&self) -> impl Iterator<Item = &RingGroup> {
        self.groups.iter().filter(|g| g.corner)
    }

    /// Checks that the groups partition `core(t+1) \ core(t)`.
    pub fn partition_holds(&self) -> bool {
        let core: BTreeSet<usize> = self.core.iter().copied().collect();
        let next: BTreeSet<usize> = self.next.iter().copied().collect();
        let ring: BTreeSet<usize> = next.difference(&core).copied().collect();
        let mut seen = BTreeSet::new();
        for g in &self.groups {
            for &f in &g.faces {
                if !seen.insert(f) {
                    return false;
                }
            }
            if g.seedable.iter().any(|f| !g.faces.contains(f)) {
                return false;
            }
        }
        core.is_subset(&next) && seen == ring
    }
}

pub fn supports(family: Family) -> bool {
    matches!(
        family,
        Family::TruncatedSquare | Family::Hex | Family::Kagome | Family::TruncatedTrihex
    )
}

pub fn ring_decomposition(spec: &LatticeSpec, t: u32) -> Result<RingSpec> {
    match spec {
        LatticeSpec::Archimedean {
            family: Family::TruncatedSquare,
        } => Ok(octagon_rings(t)),
        LatticeSpec::Archimedean { family } if supports(*family) => Ok(hex_rings(*family, t)),
        LatticeSpec::Strips { sequence } => Ok(strip_rings(sequence, t)),
        other => Err(Error::UnsupportedFamily(other.to_string())),
    }
}

/// Open window on `core(t)`.
pub fn core_window(family: Family, t: u32) -> Result<Window> {
    let keys = match family {
        Family::TruncatedSquare => octagon_core(t as i32),
        f if supports(f) => hex_core(f, t as i32),
        other => return Err(Error::UnsupportedFamily(other.to_string())),
    };
    Ok(template(family).window(&keys, family.into(), Extent::Radius { t }))
}

fn octagon_core(s: i32) -> Vec<FaceKey> {
    let mut keys = Vec::new();
    for j in -s..=s {
        for i in -s..=s {
            keys.push((i, j, 0));
        }
    }
    for j in -s..s {
        for i in -s..s {
            keys.push((i, j, 1));
        }
    }
    keys
}

/// Generic assembly: window on `core(t+2)`, ids of `core(t)`, `core(t+1)`,
/// and ring groups from `classify`, which returns (label, corner, seedable).
fn assemble<K: Copy + Eq + std::hash::Hash>(
    cores: [Vec<K>; 3],
    window: impl FnOnce(&[K]) -> (TilingPatch, HashMap<K, usize>),
    classify: impl Fn(K) -> (String, bool, bool),
    spec: LatticeSpec,
    t: u32,
) -> RingSpec {
    let [c0, c1, c2] = cores;
    let (patch, index) = window(&c2);
    let inner: BTreeSet<usize> = c0.iter().map(|k| index[k]).collect();
    let mut groups: Vec<RingGroup> = Vec::new();
    for &k in &c1 {
        let id = index[&k];
        if inner.contains(&id) {
            continue;
        }
        let (label, corner, seedable) = classify(k);
        let g = match groups.iter().position(|g| g.label == label) {
            Some(i) => &mut groups[i],
            None => {
                groups.push(RingGroup {
                    label,
                    corner,
                    faces: vec![],
                    seedable: vec![],
                });
                groups.last_mut().unwrap()
            }
        };
        g.faces.push(id);
        if seedable {
            g.seedable.push(id);
        }
    }
    groups.sort_by_key(|g| (g.corner, g.label.clone()));
    RingSpec {
        family: spec,
        t,
        patch,
        core: inner.into_iter().collect(),
        next: c1.iter().map(|k| index[k]).collect(),
        groups,
    }
}

fn octagon_rings(t: u32) -> RingSpec {
    let n = t as i32 + 1;
    let tpl = template(Family::TruncatedSquare);
    let classify = move |(i, j, p): FaceKey| {
        let (lo, hi) = if p == 0 { (-n, n) } else { (-n, n - 1) };
        let vert = if j == hi {
            Some("top")
        } else if j == lo {
            Some("bottom")
        } else {
            None
        };
        let horiz = if i == lo {
            Some("left")
        } else if i == hi {
            Some("right")
        } else {
            None
        };
        match (vert, horiz) {
            (Some(v), Some(h)) => (format!("corner-{v}-{h}"), true, false),
            (Some(v), None) => (v.to_string(), false, p == 0),
            (None, Some(h)) => (h.to_string(), false, p == 0),
            (None, None) => unreachable!("face outside the ring"),
        }
    };
    let s = t as i32;
    assemble(
        [octagon_core(s), octagon_core(s + 1), octagon_core(s + 2)],
        |keys| {
            let w = tpl.window(
                keys,
                Family::TruncatedSquare.into(),
                Extent::Radius { t: t + 2 },
            );
            (w.patch, w.index)
        },
        classify,
        Family::TruncatedSquare.into(),
        t,
    )
}

/// Axial offsets of the six primary neighbors, in ring-walk order.
const DIRS: [(i32, i32); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

fn hex_dist(i: i32, j: i32) -> i32 {
    (i.abs() + j.abs() + (i + j).abs()) / 2
}

/// Number of primary neighbors a secondary face needs inside the ball.
fn secondary_need(family: Family, primaries: usize) -> usize {
    match family {
        Family::Kagome => 2,
        _ => primaries,
    }
}

fn primary_neighbors(family: Family, key: FaceKey) -> Vec<FaceKey> {
    template(family)
        .neighbor_keys(key)
        .filter(|k| k.2 == 0)
        .collect()
}

fn hex_core(family: Family, s: i32) -> Vec<FaceKey> {
    let tpl = template(family);
    let mut keys = Vec::new();
    for j in -s..=s {
        for i in -s..=s {
            if hex_dist(i, j) <= s {
                keys.push((i, j, 0));
            }
        }
    }
    let mut secondary = BTreeSet::new();
    for &k in &keys {
        for n in tpl.neighbor_keys(k).filter(|n| n.2 != 0) {
            secondary.insert(n);
        }
    }
    for k in secondary {
        let prim = primary_neighbors(family, k);
        let inside = prim.iter().filter(|p| hex_dist(p.0, p.1) <= s).count();
        if inside >= secondary_need(family, prim.len()) {
            keys.push(k);
        }
    }
    keys
}

fn hex_rings(family: Family, t: u32) -> RingSpec {
    let n = t as i32 + 1;
    // Walk the ring of radius n: position j == 0 of each leg is a corner.
    let mut walk: HashMap<(i32, i32), (usize, i32)> = HashMap::new();
    let mut pos = (DIRS[4].0 * n, DIRS[4].1 * n);
    for (side, d) in DIRS.iter().enumerate() {
        for step in 0..n {
            walk.insert(pos, (side, step));
            pos = (pos.0 + d.0, pos.1 + d.1);
        }
    }
    let label = move |side: usize, step: i32| {
        if step == 0 && t > 0 {
            (format!("corner-{side}"), true)
        } else {
            (format!("side-{side}"), false)
        }
    };
    let classify = move |k: FaceKey| {
        if k.2 == 0 {
            let (side, step) = walk[&(k.0, k.1)];
            let (l, corner) = label(side, step);
            return (l, corner, !corner);
        }
        let ring: Vec<(usize, i32)> = primary_neighbors(family, k)
            .into_iter()
            .filter_map(|p| walk.get(&(p.0, p.1)).copied())
            .collect();
        let pick = ring
            .iter()
            .find(|(_, step)| *step == 0)
            .or(ring.first())
            .copied()
            .expect("ring secondary");
        let (l, corner) = label(pick.0, pick.1);
        (l, corner, false)
    };
    let s = t as i32;
    let tpl = template(family);
    assemble(
        [
            hex_core(family, s),
            hex_core(family, s + 1),
            hex_core(family, s + 2),
        ],
        |keys| {
            let w = tpl.window(keys, family.into(), Extent::Radius { t: t + 2 });
            (w.patch, w.index)
        },
        classify,
        family.into(),
        t,
    )
}

fn strip_center(plane: &StripPlane) -> Q {
    let piece = match plane.seq.row(0).kind {
        super::strips::StripKind::Hex => Piece::Hexagon,
        super::strips::StripKind::Square => Piece::Square,
    };
    plane.center_x(StripFace {
        row: 0,
        piece,
        j: 0,
    })
}

/// Keeps triangles only between two kept hexagons of their row.
fn close_row(kept: BTreeSet<StripFace>, candidates: &[StripFace]) -> Vec<StripFace> {
    candidates
        .iter()
        .copied()
        .filter(|f| {
            if f.is_triangle() {
                let h = |j| StripFace {
                    row: f.row,
                    piece: Piece::Hexagon,
                    j,
                };
                kept.contains(&h(f.j)) && kept.contains(&h(f.j + 1))
            } else {
                kept.contains(f)
            }
        })
        .collect()
}

/// Faces of row `r` lying directly beyond (above when `up`) the faces
/// `prev` of the row nearer the center: a non-triangular face is kept when
/// its facing boundary segment lies within the span of `prev`'s segments.
fn supported_row(plane: &StripPlane, prev: &[StripFace], r: i64, up: bool) -> Vec<StripFace> {
    let starts: Vec<Q> = prev.iter().filter_map(|&f| plane.segment(f, up)).collect();
    let (Some(&lo), Some(&hi)) = (starts.iter().min(), starts.iter().max()) else {
        return vec![];
    };
    let hi = hi + 1;
    let candidates = plane.row_faces(r, lo - 2, hi + 2);
    let kept = candidates
        .iter()
        .copied()
        .filter(|&f| !f.is_triangle() && plane.segment(f, !up).is_some_and(|a| a >= lo && a < hi))
        .collect();
    close_row(kept, &candidates)
}

/// Rows of `core(s)`: `2s` side lengths either way of the center on row 0,
/// then row by row outward, each supported by the previous one.
fn strip_core_rows(plane: &StripPlane, c: Q, s: i64) -> BTreeMap<i64, Vec<StripFace>> {
    let reach = Q::from(2 * s);
    let candidates = plane.row_faces(0, c - reach - 2, c + reach + 2);
    let kept = candidates
        .iter()
        .copied()
        .filter(|f| !f.is_triangle() && (plane.center_x(*f) - c).abs() <= reach)
        .collect();
    let mut rows = BTreeMap::from([(0, close_row(kept, &candidates))]);
    for r in 1..=s {
        let up = supported_row(plane, &rows[&(r - 1)], r, true);
        let down = supported_row(plane, &rows[&(1 - r)], -r, false);
        rows.insert(r, up);
        rows.insert(-r, down);
    }
    // A face with one neighbor inside can never fill from inside at k = 2,
    // nor help anything else to; drop such faces until none remain.
    let mut set: BTreeSet<StripFace> = rows.values().flatten().copied().collect();
    loop {
        let thin: Vec<StripFace> = set
            .iter()
            .copied()
            .filter(|&f| {
                plane
                    .neighbors(f)
                    .iter()
                    .filter(|n| set.contains(n))
                    .count()
                    < 2
            })
            .collect();
        if thin.is_empty() {
            break;
        }
        for f in thin {
            set.remove(&f);
        }
    }
    for row in rows.values_mut() {
        row.retain(|f| set.contains(f));
    }
    rows
}

fn strip_core(plane: &StripPlane, c: Q, s: i64) -> Vec<StripFace> {
    strip_core_rows(plane, c, s)
        .into_values()
        .flatten()
        .collect()
}

/// Face count of the strip region `core(t)`, without building a patch.
pub fn strip_core_size(seq: &StripSequence, t: u32) -> usize {
    let plane = StripPlane::new(seq.clone());
    strip_core(&plane, strip_center(&plane), t as i64).len()
}

fn strip_rings(seq: &StripSequence, t: u32) -> RingSpec {
    let plane = StripPlane::new(seq.clone());
    let c = strip_center(&plane);
    let s = t as i64;
    let n = s + 1;
    // Top and bottom sides: faces directly beyond the outer rows of core(t).
    let rows = strip_core_rows(&plane, c, s);
    let mut beyond: BTreeSet<StripFace> = supported_row(&plane, &rows[&s], n, true)
        .into_iter()
        .collect();
    beyond.extend(supported_row(&plane, &rows[&-s], -n, false));
    let classify = {
        let plane = plane.clone();
        move |f: StripFace| {
            let dx = plane.center_x(f) - c;
            let side = if dx < Q::from(0) { "left" } else { "right" };
            let vert = if f.row > 0 { "top" } else { "bottom" };
            let seed = !f.is_triangle();
            if f.row.abs() == n {
                if beyond.contains(&f) {
                    (vert.to_string(), false, seed)
                } else {
                    (format!("corner-{vert}-{side}"), true, false)
                }
            } else if f.row == 0 {
                (format!("corner-{side}"), true, false)
            } else {
                (format!("{vert}-{side}"), false, seed)
            }
        }
    };
    let cores = [
        strip_core(&plane, c, s),
        strip_core(&plane, c, s + 1),
        strip_core(&plane, c, s + 2),
    ];
    let next: BTreeSet<StripFace> = cores[1].iter().copied().collect();
    let window_faces = cores[2].clone();
    let mut spec = assemble(
        cores,
        |keys| {
            let w = plane.window(keys, Extent::Radius { t: t + 2 });
            (w.patch, w.index)
        },
        classify,
        LatticeSpec::Strips {
            sequence: seq.clone(),
        },
        t,
    );
    // A square strip between hex strips can run one square past the hex row
    // beyond it. Such a square has no outward neighbor in core(t+1) and waits
    // on the corner beside it, so it joins that corner.
    let key: Vec<StripFace> = {
        let w = plane.window(&window_faces, Extent::Radius { t: t + 2 });
        let mut key = vec![window_faces[0]; w.patch.len()];
        for (k, i) in w.index {
            key[i] = k;
        }
        key
    };
    let lateral: Vec<usize> = (0..spec.groups.len())
        .filter(|&i| !spec.groups[i].corner && spec.groups[i].label.contains('-'))
        .collect();
    for gi in lateral.iter().copied() {
        let stranded: Vec<usize> = spec.groups[gi]
            .faces
            .iter()
            .copied()
            .filter(|&f| {
                let sf = key[f];
                let out = sf.row + sf.row.signum();
                sf.piece == Piece::Square
                    && !plane
                        .neighbors(sf)
                        .iter()
                        .any(|n| n.row == out && next.contains(n))
            })
            .collect();
        for f in stranded {
            let corner = spec.groups.iter().position(|h| {
                h.corner && spec.patch.neighbors(f).iter().any(|n| h.faces.contains(n))
            });
            if let Some(ci) = corner {
                spec.groups[gi].faces.retain(|&x| x != f);
                spec.groups[ci].faces.push(f);
            }
        }
    }
    // Seedable: the non-triangular faces whose infection alone, on top of
    // core(t), fills their side at k = 2.
    let sides: Vec<usize> = (0..spec.groups.len())
        .filter(|&i| !spec.groups[i].corner)
        .collect();
    for gi in sides {
        let g = &spec.groups[gi];
        let fills = |f: usize| {
            let mut seeds = spec.core.clone();
            seeds.push(f);
            let state =
                seed_explicit(&spec.patch, &seeds).and_then(|st| run_bootstrap(&spec.patch, st, 2));
            state
                .map(|(st, _)| g.faces.iter().all(|&x| st.infected[x]))
                .unwrap_or(false)
        };
        let seedable: Vec<usize> = g
            .faces
            .iter()
            .copied()
            .filter(|&f| !key[f].is_triangle() && fills(f))
            .collect();
        spec.groups[gi].seedable = seedable;
    }
    spec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octagon_core_counts() {
        for t in 0..=10u32 {
            let w = core_window(Family::TruncatedSquare, t).unwrap();
            let n = (2 * t + 1) as usize;
            assert_eq!(w.patch.faces_with_sides(8).len(), n * n);
            assert_eq!(w.patch.faces_with_sides(4).len(), (2 * t as usize).pow(2));
        }
    }

    #[test]
    fn octagon_ring_shape() {
        let r = ring_decomposition(&Family::TruncatedSquare.into(), 1).unwrap();
        assert!(r.partition_holds());
        let core_oct = r.core.iter().filter(|&&f| r.patch.sides(f) == 8).count();
        let core_sq = r.core.len() - core_oct;
        assert_eq!((core_oct, core_sq), (9, 4));
        assert_eq!(r.sides().count(), 4);
        assert_eq!(r.corners().count(), 4);
        for s in r.sides() {
            assert_eq!(s.seedable.len(), 3);
        }
    }

    #[test]
    fn hex_ring_at_zero() {
        let r = ring_decomposition(&Family::Hex.into(), 0).unwrap();
        assert_eq!(r.core.len(), 1);
        assert_eq!(r.sides().count(), 6);
        assert!(r.sides().all(|s| s.faces.len() == 1));
        assert!(r.partition_holds());
    }

    #[test]
    fn hex_like_partitions() {
        for f in [Family::Hex, Family::Kagome, Family::TruncatedTrihex] {
            for t in 0..4 {
                let r = ring_decomposition(&f.into(), t).unwrap();
                assert!(r.partition_holds(), "{f} t={t}");
                assert_eq!(r.sides().count(), 6);
                r.patch.validate().unwrap();
            }
        }
    }

    #[test]
    fn strips_rows_and_seedable() {
        let seq = StripSequence::mixed_example();
        let r = ring_decomposition(&LatticeSpec::Strips { sequence: seq }, 2).unwrap();
        assert!(r.partition_holds());
        assert_eq!(r.sides().count(), 6);
        assert!(r.sides().all(|s| s.seedable.len() >= 2));
        // Non-triangular faces sit at mid-height of their row.
        let rows: BTreeSet<i64> = r
            .core
            .iter()
            .filter(|&&f| r.patch.sides(f) != 3)
            .map(|&f| (r.patch.faces[f].center[1] * 1000.0).round() as i64)
            .collect();
        assert_eq!(rows.len(), 5);
        for t in 1..=3 {
            let r = ring_decomposition(
                &LatticeSpec::Strips {
                    sequence: StripSequence::mixed_example(),
                },
                t,
            )
            .unwrap();
            assert!(r.sides().all(|s| s.seedable.len() >= t as usize), "t={t}");
        }
    }

    #[test]
    fn unsupported_family() {
        assert!(ring_decomposition(&Family::Square.into(), 1).is_err());
    }
}
