//! Unit cells of the eleven Archimedean lattices.

use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use super::patch::{Extent, Family, LatticeSpec, TilingPatch, Topology};
use super::ring;
use super::template::{FaceKey, Poly, Template};
use crate::error::{Error, Result};

const S3: f64 = 1.732_050_807_568_877_2;
const S2: f64 = std::f64::consts::SQRT_2;

fn cell(family: Family) -> ([f64; 2], [f64; 2], Vec<Poly>) {
    match family {
        Family::Square => ([1.0, 0.0], [0.0, 1.0], vec![Poly::new([0.5, 0.5], 4, 45.0)]),
        Family::Hex => (
            [1.5, S3 / 2.0],
            [0.0, S3],
            vec![Poly::new([0.0, 0.0], 6, 0.0)],
        ),
        Family::Tri => (
            [1.0, 0.0],
            [0.5, S3 / 2.0],
            vec![
                Poly::new([0.5, S3 / 6.0], 3, 90.0),
                Poly::new([1.0, S3 / 3.0], 3, -90.0),
            ],
        ),
        Family::Kagome => (
            [2.0, 0.0],
            [1.0, S3],
            vec![
                Poly::new([0.0, 0.0], 6, 0.0),
                Poly::new([1.0, S3 / 3.0], 3, -90.0),
                Poly::new([2.0, 2.0 * S3 / 3.0], 3, 90.0),
            ],
        ),
        Family::TruncatedSquare => {
            let l = 1.0 + S2;
            (
                [l, 0.0],
                [0.0, l],
                vec![
                    Poly::new([0.0, 0.0], 8, 22.5),
                    Poly::new([l / 2.0, l / 2.0], 4, 0.0),
                ],
            )
        }
        Family::TruncatedHex => {
            let l = 2.0 + S3;
            let (a1, a2) = tri_basis(l);
            let c = [(a1[0] + a2[0]) / 3.0, (a1[1] + a2[1]) / 3.0];
            (
                a1,
                a2,
                vec![
                    Poly::new([0.0, 0.0], 12, 15.0),
                    Poly::new(c, 3, 30.0),
                    Poly::new([2.0 * c[0], 2.0 * c[1]], 3, 90.0),
                ],
            )
        }
        Family::TruncatedTrihex => {
            let l = 3.0 + S3;
            let (a1, a2) = tri_basis(l);
            let c = [(a1[0] + a2[0]) / 3.0, (a1[1] + a2[1]) / 3.0];
            let mut polys = vec![Poly::new([0.0, 0.0], 12, 15.0)];
            polys.extend(half_vector_squares(a1, a2));
            polys.push(Poly::new(c, 6, 0.0));
            polys.push(Poly::new([2.0 * c[0], 2.0 * c[1]], 6, 0.0));
            (a1, a2, polys)
        }
        Family::Rhombitrihex => {
            let l = S3 + 1.0;
            let (a1, a2) = tri_basis(l);
            let c = [(a1[0] + a2[0]) / 3.0, (a1[1] + a2[1]) / 3.0];
            let mut polys = vec![Poly::new([0.0, 0.0], 6, 30.0)];
            polys.extend(half_vector_squares(a1, a2));
            polys.push(Poly::new(c, 3, 90.0));
            polys.push(Poly::new([2.0 * c[0], 2.0 * c[1]], 3, -90.0));
            (a1, a2, polys)
        }
        Family::ElongatedTri => (
            [1.0, 0.0],
            [0.5, 1.0 + S3 / 2.0],
            vec![
                Poly::new([0.5, 0.5], 4, 45.0),
                Poly::new([0.5, 1.0 + S3 / 6.0], 3, 90.0),
                Poly::new([1.0, 1.0 + S3 / 3.0], 3, -90.0),
            ],
        ),
        Family::SnubHex => {
            let a1 = [2.5, S3 / 2.0];
            let a2 = [0.5, 1.5 * S3];
            let mut polys = vec![Poly::new([0.0, 0.0], 6, 0.0)];
            // Unit triangles of the underlying triangular lattice that are
            // not covered by a hexagon of the cell lattice.
            for j in -6..=6 {
                for i in -6..=6 {
                    let base = [i as f64 + j as f64 / 2.0, j as f64 * S3 / 2.0];
                    for (c, th) in [
                        ([base[0] + 0.5, base[1] + S3 / 6.0], 90.0),
                        ([base[0] + 1.0, base[1] + S3 / 3.0], -90.0),
                    ] {
                        if in_cell(a1, a2, c) && hex_distance(a1, a2, c) > 1.0 {
                            polys.push(Poly::new(c, 3, th));
                        }
                    }
                }
            }
            (a1, a2, polys)
        }
        Family::SnubSquare => {
            let l = (1.0 + S3) / S2;
            let a1 = [l, 0.0];
            let a2 = [0.0, l];
            let squares = vec![
                Poly::new([0.0, 0.0], 4, 60.0),
                Poly::new([l / 2.0, l / 2.0], 4, 30.0),
            ];
            let polys = fill_with_triangles(a1, a2, squares);
            (a1, a2, polys)
        }
    }
}

fn tri_basis(l: f64) -> ([f64; 2], [f64; 2]) {
    ([l, 0.0], [l / 2.0, l * S3 / 2.0])
}

/// Squares centered on the three half lattice vectors, edges facing along
/// the vector.
fn half_vector_squares(a1: [f64; 2], a2: [f64; 2]) -> Vec<Poly> {
    [a1, a2, [a2[0] - a1[0], a2[1] - a1[1]]]
        .into_iter()
        .map(|v| {
            let dir = v[1].atan2(v[0]).to_degrees();
            Poly::new([v[0] / 2.0, v[1] / 2.0], 4, dir + 45.0)
        })
        .collect()
}

fn frac(a1: [f64; 2], a2: [f64; 2], p: [f64; 2]) -> (f64, f64) {
    let det = a1[0] * a2[1] - a1[1] * a2[0];
    (
        (p[0] * a2[1] - p[1] * a2[0]) / det,
        (a1[0] * p[1] - a1[1] * p[0]) / det,
    )
}

fn in_cell(a1: [f64; 2], a2: [f64; 2], p: [f64; 2]) -> bool {
    let (u, v) = frac(a1, a2, p);
    let e = 1e-9;
    (-e..1.0 - e).contains(&u) && (-e..1.0 - e).contains(&v)
}

fn hex_distance(a1: [f64; 2], a2: [f64; 2], p: [f64; 2]) -> f64 {
    let mut best = f64::INFINITY;
    for i in -2..=2 {
        for j in -2..=2 {
            let q = [
                i as f64 * a1[0] + j as f64 * a2[0],
                i as f64 * a1[1] + j as f64 * a2[1],
            ];
            best = best.min((p[0] - q[0]).hypot(p[1] - q[1]));
        }
    }
    best
}

/// Adds an outward triangle on every polygon edge of the lattice that has
/// no partner, keeping one copy per translation class.
fn fill_with_triangles(a1: [f64; 2], a2: [f64; 2], base: Vec<Poly>) -> Vec<Poly> {
    let shifted = |p: &Poly, i: i32, j: i32| {
        p.shifted([
            i as f64 * a1[0] + j as f64 * a2[0],
            i as f64 * a1[1] + j as f64 * a2[1],
        ])
    };
    let mut all_mids = Vec::new();
    for p in &base {
        for i in -2..=2 {
            for j in -2..=2 {
                all_mids.extend(shifted(p, i, j).midpoints());
            }
        }
    }
    let mut out = base.clone();
    let mut seen: Vec<(f64, f64)> = Vec::new();
    for p in &base {
        for m in p.midpoints() {
            let matches = all_mids
                .iter()
                .filter(|q| (q[0] - m[0]).abs() < 1e-6 && (q[1] - m[1]).abs() < 1e-6)
                .count();
            if matches > 1 {
                continue;
            }
            let n = [m[0] - p.center[0], m[1] - p.center[1]];
            let len = n[0].hypot(n[1]);
            let n = [n[0] / len, n[1] / len];
            let c = [m[0] + n[0] * S3 / 6.0, m[1] + n[1] * S3 / 6.0];
            let (u, v) = frac(a1, a2, c);
            let (fu, fv) = (u - (u + 1e-9).floor(), v - (v + 1e-9).floor());
            if seen
                .iter()
                .any(|&(x, y)| (x - fu).abs() < 1e-6 && (y - fv).abs() < 1e-6)
            {
                continue;
            }
            seen.push((fu, fv));
            let c = [fu * a1[0] + fv * a2[0], fu * a1[1] + fv * a2[1]];
            out.push(Poly::new(c, 3, n[1].atan2(n[0]).to_degrees()));
        }
    }
    out
}

/// Cached template for `family`.
pub fn template(family: Family) -> &'static Template {
    static CACHE: OnceLock<Vec<Template>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        Family::ALL
            .iter()
            .map(|&f| {
                let (a1, a2, polys) = cell(f);
                Template::derive(f.name(), a1, a2, polys)
                    .unwrap_or_else(|e| panic!("template {f}: {e}"))
            })
            .collect()
    });
    &all[Family::ALL.iter().position(|&f| f == family).unwrap()]
}

/// (3.4.6.4) on a doubled cell with the rosette at the origin (hexagon, its
/// six squares and six triangles) replaced by one 12-gon.
pub fn merged_rosette_template() -> &'static Template {
    static CACHE: OnceLock<Template> = OnceLock::new();
    CACHE.get_or_init(|| {
        let base = template(Family::Rhombitrihex);
        let a1 = [2.0 * base.a1[0], 2.0 * base.a1[1]];
        let a2 = [2.0 * base.a2[0], 2.0 * base.a2[1]];
        let mut polys = vec![Poly::new([0.0, 0.0], 12, 15.0)];
        for cy in 0..2 {
            for cx in 0..2 {
                for p in &base.polys {
                    let q = p.shifted(base.offset(cx, cy));
                    if hex_distance(a1, a2, q.center) > 2.0 {
                        polys.push(q);
                    }
                }
            }
        }
        Template::derive("3.4.6.4/4.6.12", a1, a2, polys).expect("merged rosette template")
    })
}

/// Faces within graph distance `t` of `start`.
pub fn ball(template: &Template, start: FaceKey, t: u32) -> Vec<FaceKey> {
    let mut seen = BTreeSet::from([start]);
    let mut order = vec![start];
    let mut queue = VecDeque::from([(start, 0)]);
    while let Some((key, d)) = queue.pop_front() {
        if d == t {
            continue;
        }
        for n in template.neighbor_keys(key) {
            if seen.insert(n) {
                order.push(n);
                queue.push_back((n, d + 1));
            }
        }
    }
    order
}

/// Builds a torus (`Cells` extent) or an open window (`Cells` block, or
/// `Radius` ring core for the ring families and a graph ball otherwise).
pub fn build_archimedean(
    family: Family,
    extent: Extent,
    topology: Topology,
) -> Result<TilingPatch> {
    let tpl = template(family);
    let spec = LatticeSpec::from(family);
    match (topology, extent) {
        (_, Extent::Cells { width, height }) if width == 0 || height == 0 => {
            Err(Error::InvalidExtent("cell counts must be positive".into()))
        }
        (Topology::Torus, Extent::Cells { width, height }) => {
            if (width as u64) * (height as u64) * tpl.faces_per_cell() as u64 > (1 << 26) {
                return Err(Error::InvalidExtent(format!(
                    "{width}x{height} cells is too large"
                )));
            }
            tpl.torus(width, height, spec)
        }
        (Topology::Open, Extent::Cells { width, height }) => {
            let keys = tpl.cell_block(0, width as i32 - 1, 0, height as i32 - 1);
            Ok(tpl.window(&keys, spec, extent).patch)
        }
        (Topology::Open, Extent::Radius { t }) => {
            if t > 200 {
                return Err(Error::InvalidExtent(format!("radius {t} is too large")));
            }
            if ring::supports(family) {
                Ok(ring::core_window(family, t)?.patch)
            } else {
                let keys = ball(tpl, (0, 0, 0), t);
                Ok(tpl.window(&keys, spec, extent).patch)
            }
        }
        (Topology::Torus, other) => Err(Error::InvalidExtent(format!(
            "torus needs a cell extent, got {other}"
        ))),
        (Topology::Open, other) => Err(Error::InvalidExtent(format!("unsupported extent {other}"))),
    }
}

/// Torus of the merged-rosette tiling, measured in doubled cells.
pub fn build_merged_rosettes(width: u32, height: u32) -> Result<TilingPatch> {
    merged_rosette_template().torus(width, height, LatticeSpec::MergedRosettes)
}

/// Smallest square torus side (in cells) with at least `faces` faces.
pub fn torus_side_for(family: Family, faces: usize) -> u32 {
    let tpl = template(family);
    let (mw, mh) = tpl.torus_minimum();
    let per = tpl.faces_per_cell();
    let mut side = mw.max(mh);
    while (side as usize).pow(2) * per < faces {
        side += 1;
    }
    side
}
