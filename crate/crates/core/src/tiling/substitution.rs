//! Local surgery on hexagonal patches.

use std::collections::BTreeSet;

use super::patch::{Face, Family, LatticeSpec, TilingPatch, Topology, Vertex};
use crate::error::{Error, Result};

/// Neighbor across each edge, in edge order (edge `e` joins corners `e` and
/// `e + 1`). Torus faces store neighbors in edge order already; open faces
/// are matched through shared corners.
pub fn edge_neighbors(patch: &TilingPatch, f: usize) -> Vec<Option<usize>> {
    let face = &patch.faces[f];
    if patch.topology == Topology::Torus || face.polygon.len() != face.sides as usize {
        return face.neighbors.iter().map(|&g| Some(g)).collect();
    }
    let near = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).abs() < 1e-6 && (a[1] - b[1]).abs() < 1e-6;
    let n = face.polygon.len();
    (0..n)
        .map(|e| {
            let (p, q) = (face.polygon[e], face.polygon[(e + 1) % n]);
            face.neighbors.iter().copied().find(|&g| {
                let poly = &patch.faces[g].polygon;
                poly.iter().any(|&c| near(c, p)) && poly.iter().any(|&c| near(c, q))
            })
        })
        .collect()
}

/// Replaces each target hexagon with six triangles meeting at its center.
///
/// Triangle `e` sits on edge `e` of the hexagon. Triangle 0 keeps the
/// hexagon's index and the other five are appended, so untouched faces keep
/// their indices.
pub fn substitute_hexagons(patch: &TilingPatch, targets: &BTreeSet<usize>) -> Result<TilingPatch> {
    match &patch.spec {
        LatticeSpec::Archimedean {
            family: Family::Hex,
        } => {}
        other => {
            return Err(Error::WrongFamily {
                expected: "(6.6.6)".into(),
                found: other.to_string(),
            });
        }
    }
    for &h in targets {
        if h >= patch.len() {
            return Err(Error::FaceOutOfRange(h, patch.len()));
        }
        if patch.faces[h].sides != 6 {
            return Err(Error::NotAHexagon(h));
        }
        if let Some(&g) = patch.faces[h]
            .neighbors
            .iter()
            .find(|g| targets.contains(g))
        {
            return Err(Error::AdjacentTargets(h, g));
        }
    }
    if targets.is_empty() {
        return Ok(patch.clone());
    }

    let mut out = patch.clone();
    out.spec = LatticeSpec::ModifiedHex {
        substitutions: targets.iter().copied().collect(),
    };
    for &h in targets {
        let across = edge_neighbors(patch, h);
        let hex = &patch.faces[h];
        let ids: Vec<usize> = std::iter::once(h)
            .chain((0..5).map(|k| out.faces.len() + k))
            .collect();
        let corners = hex.polygon.clone();
        for e in 0..6 {
            let mut neighbors = vec![ids[(e + 5) % 6], ids[(e + 1) % 6]];
            if let Some(g) = across[e] {
                neighbors.push(g);
            }
            let polygon = if corners.len() == 6 {
                vec![hex.center, corners[e], corners[(e + 1) % 6]]
            } else {
                vec![]
            };
            let center = if polygon.len() == 3 {
                [
                    (polygon[0][0] + polygon[1][0] + polygon[2][0]) / 3.0,
                    (polygon[0][1] + polygon[1][1] + polygon[2][1]) / 3.0,
                ]
            } else {
                hex.center
            };
            let tri = Face {
                sides: 3,
                exterior_edges: 3 - neighbors.len() as u32,
                neighbors,
                center,
                polygon,
            };
            if e == 0 {
                out.faces[h] = tri;
            } else {
                out.faces.push(tri);
            }
            if let Some(g) = across[e] {
                for n in out.faces[g].neighbors.iter_mut() {
                    if *n == h {
                        *n = ids[e];
                    }
                }
            }
        }
        // Split the hexagon's share of each corner vertex between the two
        // triangles there; corner `e` lies between edges `e - 1` and `e`.
        for v in out.vertices.iter_mut() {
            let Some(pos) = v.faces.iter().position(|&f| f == h) else {
                continue;
            };
            let m = v.faces.len();
            let before = v.faces[(pos + m - 1) % m];
            let after = v.faces[(pos + 1) % m];
            let corner = (0..6).find(|&e| {
                let pair = [across[(e + 5) % 6], across[e]];
                pair.contains(&Some(before)) && pair.contains(&Some(after))
            });
            if let Some(e) = corner {
                let (a, b) = if across[e] == Some(after) {
                    (ids[e], ids[(e + 5) % 6])
                } else {
                    (ids[(e + 5) % 6], ids[e])
                };
                v.faces.splice(pos..=pos, [a, b]);
            }
        }
        out.vertices.push(Vertex {
            faces: ids.clone(),
            position: hex.center,
        });
    }
    out.validate()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::archimedean::build_archimedean;
    use crate::tiling::patch::Extent;

    fn hex_torus() -> TilingPatch {
        build_archimedean(
            Family::Hex,
            Extent::Cells {
                width: 6,
                height: 6,
            },
            Topology::Torus,
        )
        .unwrap()
    }

    #[test]
    fn empty_targets_is_identity() {
        let p = hex_torus();
        assert_eq!(substitute_hexagons(&p, &BTreeSet::new()).unwrap(), p);
    }

    #[test]
    fn one_target() {
        let p = hex_torus();
        let q = substitute_hexagons(&p, &[7].into_iter().collect()).unwrap();
        assert_eq!(q.len(), p.len() - 1 + 6);
        let new: Vec<usize> = std::iter::once(7).chain(p.len()..q.len()).collect();
        for &f in &new {
            assert_eq!(q.faces[f].sides, 3);
            assert_eq!(q.faces[f].neighbors.len(), 3);
        }
        let before = p.vertex_census();
        let after = q.vertex_census();
        let tri6: crate::tiling::VertexType = "3.3.3.3.3.3".parse().unwrap();
        assert_eq!(after.get(&tri6), Some(&1));
        assert_eq!(before.get(&tri6), None);
        let t3366: crate::tiling::VertexType = "3.3.6.6".parse().unwrap();
        assert_eq!(after.get(&t3366), Some(&6));
    }

    #[test]
    fn rejects_bad_targets() {
        let p = hex_torus();
        let n = p.faces[0].neighbors[0];
        assert!(matches!(
            substitute_hexagons(&p, &[0, n].into_iter().collect()),
            Err(Error::AdjacentTargets(..))
        ));
        let q = substitute_hexagons(&p, &[0].into_iter().collect()).unwrap();
        assert!(substitute_hexagons(&q, &[10].into_iter().collect()).is_err());
        assert!(substitute_hexagons(&p, &[10_000].into_iter().collect()).is_err());
    }

    #[test]
    fn open_window_substitution() {
        let p = build_archimedean(Family::Hex, Extent::Radius { t: 2 }, Topology::Open).unwrap();
        let q = substitute_hexagons(&p, &[0].into_iter().collect()).unwrap();
        q.validate().unwrap();
    }
}
