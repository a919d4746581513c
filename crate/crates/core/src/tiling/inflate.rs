//! Inflating the 12-gons of (3.12.12) into the hexagons of (6.6.6).
//!
//! Each triangle touches exactly three 12-gons, which pairwise share an
//! edge; collapsing the triangles therefore leaves a hexagonal adjacency on
//! the 12-gons with the triangles as its vertices.

use std::collections::HashMap;

use super::patch::{Face, Family, LatticeSpec, TilingPatch, Vertex};
use crate::error::{Error, Result};

/// Output patch plus `image[d]`, the input 12-gon behind output face `d`.
pub fn inflate_3_12_12(patch: &TilingPatch) -> Result<(TilingPatch, Vec<usize>)> {
    if patch.spec != LatticeSpec::from(Family::TruncatedHex) {
        return Err(Error::WrongFamily {
            expected: "(3.12.12)".into(),
            found: patch.spec.to_string(),
        });
    }
    let preimage = patch.faces_with_sides(12);
    let index: HashMap<usize, usize> = preimage.iter().enumerate().map(|(n, &f)| (f, n)).collect();
    // Spacing between adjacent 12-gon centers, for the drawn hexagon.
    let r = (2.0 + 3f64.sqrt()) / 3f64.sqrt();
    let faces = preimage
        .iter()
        .map(|&f| {
            let src = &patch.faces[f];
            let neighbors: Vec<usize> = src
                .neighbors
                .iter()
                .filter_map(|g| index.get(g).copied())
                .collect();
            let polygon = (0..6)
                .map(|k| {
                    let a = (30.0 + 60.0 * k as f64).to_radians();
                    [src.center[0] + r * a.cos(), src.center[1] + r * a.sin()]
                })
                .collect();
            let lost = 6u32.saturating_sub(neighbors.len() as u32);
            Face {
                sides: 6,
                exterior_edges: lost,
                neighbors,
                center: src.center,
                polygon,
            }
        })
        .collect();
    let vertices = patch
        .faces_with_sides(3)
        .into_iter()
        .filter_map(|tri| {
            let ring: Option<Vec<usize>> = patch.faces[tri]
                .neighbors
                .iter()
                .map(|g| index.get(g).copied())
                .collect();
            ring.filter(|r| r.len() == 3).map(|faces| Vertex {
                faces,
                position: patch.faces[tri].center,
            })
        })
        .collect();
    let out = TilingPatch {
        spec: Family::Hex.into(),
        topology: patch.topology,
        extent: patch.extent,
        faces,
        vertices,
        edge_to_edge: true,
    };
    out.validate()?;
    Ok((out, preimage))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::archimedean::build_archimedean;
    use crate::tiling::patch::{Extent, Topology};

    #[test]
    fn torus_inflation() {
        let p = build_archimedean(
            Family::TruncatedHex,
            Extent::Cells {
                width: 5,
                height: 4,
            },
            Topology::Torus,
        )
        .unwrap();
        let n = p.faces_with_sides(12).len();
        assert_eq!(p.faces_with_sides(3).len(), 2 * n);
        let (q, image) = inflate_3_12_12(&p).unwrap();
        assert_eq!(q.len(), n);
        assert!(q.faces.iter().all(|f| f.neighbors.len() == 6));
        for a in 0..n {
            for b in 0..n {
                assert_eq!(q.are_adjacent(a, b), p.are_adjacent(image[a], image[b]));
            }
        }
        let names: Vec<String> = q.vertex_census().keys().map(|t| t.to_string()).collect();
        assert_eq!(names, vec!["6.6.6"]);
    }

    #[test]
    fn wrong_family() {
        let p = build_archimedean(
            Family::Hex,
            Extent::Cells {
                width: 3,
                height: 3,
            },
            Topology::Torus,
        )
        .unwrap();
        assert!(inflate_3_12_12(&p).is_err());
    }
}
