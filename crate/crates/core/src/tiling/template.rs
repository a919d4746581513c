//! Fundamental-domain templates.
//!
//! A template lists the regular polygons of one translation cell. Adjacency
//! rules (face, edge) -> (face, cell offset) and the cyclic face lists around
//! each vertex orbit are derived once from the cell geometry; every patch is
//! then assembled combinatorially from those rules.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

use super::patch::{Extent, Face, LatticeSpec, TilingPatch, Topology, Vertex};
use crate::error::{Error, Result};

const EPS: f64 = 1e-6;
const REACH: i32 = 2;

/// Regular polygon with unit sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Poly {
    pub center: [f64; 2],
    pub sides: u32,
    /// Angle of the first corner, radians.
    pub theta: f64,
}

impl Poly {
    pub fn new(center: [f64; 2], sides: u32, theta_deg: f64) -> Self {
        Poly {
            center,
            sides,
            theta: theta_deg.to_radians(),
        }
    }

    pub fn circumradius(&self) -> f64 {
        0.5 / (PI / self.sides as f64).sin()
    }

    pub fn area(&self) -> f64 {
        let n = self.sides as f64;
        n / (4.0 * (PI / n).tan())
    }

    pub fn corners(&self) -> Vec<[f64; 2]> {
        let r = self.circumradius();
        (0..self.sides)
            .map(|k| {
                let a = self.theta + 2.0 * PI * k as f64 / self.sides as f64;
                [self.center[0] + r * a.cos(), self.center[1] + r * a.sin()]
            })
            .collect()
    }

    pub fn midpoints(&self) -> Vec<[f64; 2]> {
        let c = self.corners();
        let n = c.len();
        (0..n).map(|k| mid(c[k], c[(k + 1) % n])).collect()
    }

    pub fn shifted(&self, by: [f64; 2]) -> Poly {
        Poly {
            center: add(self.center, by),
            ..*self
        }
    }
}

fn add(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] + b[0], a[1] + b[1]]
}

fn mid(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0]
}

fn close(a: [f64; 2], b: [f64; 2]) -> bool {
    (a[0] - b[0]).abs() < EPS && (a[1] - b[1]).abs() < EPS
}

/// A face of the infinite tiling: cell coordinates plus index in the cell.
pub type FaceKey = (i32, i32, usize);

#[derive(Debug, Clone)]
pub struct Template {
    pub name: String,
    pub a1: [f64; 2],
    pub a2: [f64; 2],
    pub polys: Vec<Poly>,
    /// `adj[i][e]` is the face across edge `e` of polygon `i`, as
    /// (polygon, dx, dy).
    pub adj: Vec<Vec<(usize, i32, i32)>>,
    /// One entry per vertex orbit: position in cell (0, 0) and incident
    /// faces in counterclockwise order.
    pub corners: Vec<([f64; 2], Vec<(usize, i32, i32)>)>,
}

impl Template {
    /// Derives adjacency and vertex orbits, checking that the polygons
    /// tile the plane edge to edge.
    pub fn derive(name: &str, a1: [f64; 2], a2: [f64; 2], polys: Vec<Poly>) -> Result<Template> {
        let det = a1[0] * a2[1] - a1[1] * a2[0];
        let area: f64 = polys.iter().map(Poly::area).sum();
        if (area - det.abs()).abs() > 1e-6 * det.abs().max(1.0) {
            return Err(Error::InvalidPatch(format!(
                "{name}: polygon area {area} differs from cell area {}",
                det.abs()
            )));
        }
        let at = |dx: i32, dy: i32| {
            [
                dx as f64 * a1[0] + dy as f64 * a2[0],
                dx as f64 * a1[1] + dy as f64 * a2[1],
            ]
        };

        let mut adj = Vec::with_capacity(polys.len());
        for (i, p) in polys.iter().enumerate() {
            let mut row = Vec::with_capacity(p.sides as usize);
            for m in p.midpoints() {
                let mut found = Vec::new();
                for dx in -REACH..=REACH {
                    for dy in -REACH..=REACH {
                        for (j, q) in polys.iter().enumerate() {
                            if (j, dx, dy) == (i, 0, 0) {
                                continue;
                            }
                            if q.shifted(at(dx, dy))
                                .midpoints()
                                .iter()
                                .any(|&n| close(n, m))
                            {
                                found.push((j, dx, dy));
                            }
                        }
                    }
                }
                if found.len() != 1 {
                    return Err(Error::InvalidPatch(format!(
                        "{name}: edge of polygon {i} matched {} times",
                        found.len()
                    )));
                }
                row.push(found[0]);
            }
            adj.push(row);
        }

        // Vertex orbits: reduce every corner to fractional coordinates.
        let inv = |p: [f64; 2]| {
            let u = (p[0] * a2[1] - p[1] * a2[0]) / det;
            let v = (a1[0] * p[1] - a1[1] * p[0]) / det;
            (u, v)
        };
        let snap = |x: f64| {
            let f = x - x.floor();
            if f > 1.0 - 1e-7 {
                0.0
            } else {
                f
            }
        };
        let mut reps: BTreeMap<(i64, i64), [f64; 2]> = BTreeMap::new();
        for p in &polys {
            for c in p.corners() {
                let (u, v) = inv(c);
                let (fu, fv) = (snap(u), snap(v));
                let key = ((fu * 1e5).round() as i64, (fv * 1e5).round() as i64);
                reps.entry(key)
                    .or_insert([fu * a1[0] + fv * a2[0], fu * a1[1] + fv * a2[1]]);
            }
        }
        let mut corners = Vec::new();
        for (_, pos) in reps {
            let mut around = Vec::new();
            for dx in -REACH..=REACH {
                for dy in -REACH..=REACH {
                    for (j, q) in polys.iter().enumerate() {
                        let q = q.shifted(at(dx, dy));
                        if q.corners().iter().any(|&c| close(c, pos)) {
                            let ang = (q.center[1] - pos[1]).atan2(q.center[0] - pos[0]);
                            around.push((ang, (j, dx, dy)));
                        }
                    }
                }
            }
            let angle_sum: f64 = around
                .iter()
                .map(|(_, (j, _, _))| 180.0 - 360.0 / polys[*j].sides as f64)
                .sum();
            if (angle_sum - 360.0).abs() > 1e-6 {
                return Err(Error::InvalidPatch(format!(
                    "{name}: vertex angle sum {angle_sum}"
                )));
            }
            around.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            corners.push((pos, around.into_iter().map(|(_, k)| k).collect()));
        }

        Ok(Template {
            name: name.to_string(),
            a1,
            a2,
            polys,
            adj,
            corners,
        })
    }

    pub fn faces_per_cell(&self) -> usize {
        self.polys.len()
    }

    pub fn offset(&self, cx: i32, cy: i32) -> [f64; 2] {
        [
            cx as f64 * self.a1[0] + cy as f64 * self.a2[0],
            cx as f64 * self.a1[1] + cy as f64 * self.a2[1],
        ]
    }

    pub fn center(&self, key: FaceKey) -> [f64; 2] {
        add(self.polys[key.2].center, self.offset(key.0, key.1))
    }

    pub fn neighbor_keys(&self, key: FaceKey) -> impl Iterator<Item = FaceKey> + '_ {
        self.adj[key.2]
            .iter()
            .map(move |&(j, dx, dy)| (key.0 + dx, key.1 + dy, j))
    }

    /// Smallest torus width and height free of repeated and self adjacency.
    pub fn torus_minimum(&self) -> (u32, u32) {
        let mut mx = 0;
        let mut my = 0;
        for row in &self.adj {
            for &(_, dx, dy) in row {
                mx = mx.max(dx.abs());
                my = my.max(dy.abs());
            }
        }
        (2 * mx as u32 + 1, 2 * my as u32 + 1)
    }

    pub fn torus(&self, width: u32, height: u32, spec: LatticeSpec) -> Result<TilingPatch> {
        let (mw, mh) = self.torus_minimum();
        if width < mw || height < mh {
            return Err(Error::TorusTooSmall {
                family: self.name.clone(),
                width,
                height,
                min: format!("{mw}x{mh}"),
            });
        }
        let (w, h) = (width as i32, height as i32);
        let f = self.polys.len();
        let id = |cx: i32, cy: i32, i: usize| {
            ((cy.rem_euclid(h) * w + cx.rem_euclid(w)) as usize) * f + i
        };
        let mut faces = Vec::with_capacity((w * h) as usize * f);
        for cy in 0..h {
            for cx in 0..w {
                for (i, p) in self.polys.iter().enumerate() {
                    let q = p.shifted(self.offset(cx, cy));
                    let neighbors = self.adj[i]
                        .iter()
                        .map(|&(j, dx, dy)| id(cx + dx, cy + dy, j))
                        .collect();
                    faces.push(Face {
                        sides: p.sides,
                        neighbors,
                        exterior_edges: 0,
                        center: q.center,
                        polygon: q.corners(),
                    });
                }
            }
        }
        let mut vertices = Vec::new();
        for cy in 0..h {
            for cx in 0..w {
                for (pos, around) in &self.corners {
                    vertices.push(Vertex {
                        faces: around
                            .iter()
                            .map(|&(j, dx, dy)| id(cx + dx, cy + dy, j))
                            .collect(),
                        position: add(*pos, self.offset(cx, cy)),
                    });
                }
            }
        }
        let patch = TilingPatch {
            spec,
            topology: Topology::Torus,
            extent: Extent::Cells { width, height },
            faces,
            vertices,
            edge_to_edge: true,
        };
        patch.validate()?;
        Ok(patch)
    }

    /// Open window on the faces in `keys`.
    pub fn window(&self, keys: &[FaceKey], spec: LatticeSpec, extent: Extent) -> Window {
        let index: HashMap<FaceKey, usize> =
            keys.iter().enumerate().map(|(n, &k)| (k, n)).collect();
        let faces = keys
            .iter()
            .map(|&key| {
                let p = self.polys[key.2].shifted(self.offset(key.0, key.1));
                let neighbors: Vec<usize> = self
                    .neighbor_keys(key)
                    .filter_map(|n| index.get(&n).copied())
                    .collect();
                Face {
                    sides: p.sides,
                    exterior_edges: p.sides - neighbors.len() as u32,
                    neighbors,
                    center: p.center,
                    polygon: p.corners(),
                }
            })
            .collect();
        let mut cells: Vec<(i32, i32)> = keys.iter().map(|k| (k.0, k.1)).collect();
        cells.sort_unstable();
        cells.dedup();
        let mut vertices = Vec::new();
        // A vertex's faces lie within REACH cells of the vertex's own cell.
        let mut near: Vec<(i32, i32)> = cells
            .iter()
            .flat_map(|&(x, y)| {
                (-REACH..=REACH)
                    .flat_map(move |dx| (-REACH..=REACH).map(move |dy| (x + dx, y + dy)))
            })
            .collect();
        near.sort_unstable();
        near.dedup();
        for (cx, cy) in near {
            for (pos, around) in &self.corners {
                let ids: Option<Vec<usize>> = around
                    .iter()
                    .map(|&(j, dx, dy)| index.get(&(cx + dx, cy + dy, j)).copied())
                    .collect();
                if let Some(faces) = ids {
                    vertices.push(Vertex {
                        faces,
                        position: add(*pos, self.offset(cx, cy)),
                    });
                }
            }
        }
        Window {
            patch: TilingPatch {
                spec,
                topology: Topology::Open,
                extent,
                faces,
                vertices,
                edge_to_edge: true,
            },
            keys: keys.to_vec(),
            index,
        }
    }

    /// All faces of cells in `[x0, x1] x [y0, y1]`.
    pub fn cell_block(&self, x0: i32, x1: i32, y0: i32, y1: i32) -> Vec<FaceKey> {
        let mut out = Vec::new();
        for cy in y0..=y1 {
            for cx in x0..=x1 {
                for i in 0..self.polys.len() {
                    out.push((cx, cy, i));
                }
            }
        }
        out
    }

    /// Faces whose centers lie within `radius` of the origin.
    pub fn disc(&self, radius: f64) -> Vec<FaceKey> {
        let span = {
            let long = self.a1[0]
                .hypot(self.a1[1])
                .max(self.a2[0].hypot(self.a2[1]));
            let det = (self.a1[0] * self.a2[1] - self.a1[1] * self.a2[0]).abs();
            // det / long is the smallest height of the cell parallelogram.
            (radius / (det / long)).ceil() as i32 + 2
        };
        self.cell_block(-span, span, -span, span)
            .into_iter()
            .filter(|&k| {
                let c = self.center(k);
                c[0].hypot(c[1]) <= radius + EPS
            })
            .collect()
    }
}

/// An open patch together with the map back to plane faces.
#[derive(Debug, Clone)]
pub struct Window {
    pub patch: TilingPatch,
    pub keys: Vec<FaceKey>,
    pub index: HashMap<FaceKey, usize>,
}

impl Window {
    pub fn id(&self, key: FaceKey) -> Option<usize> {
        self.index.get(&key).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::patch::Family;

    fn square() -> Template {
        Template::derive(
            "4.4.4.4",
            [1.0, 0.0],
            [0.0, 1.0],
            vec![Poly::new([0.5, 0.5], 4, 45.0)],
        )
        .unwrap()
    }

    #[test]
    fn square_rules() {
        let t = square();
        let mut offs: Vec<(i32, i32)> = t.adj[0].iter().map(|&(_, x, y)| (x, y)).collect();
        offs.sort();
        assert_eq!(offs, vec![(-1, 0), (0, -1), (0, 1), (1, 0)]);
        assert_eq!(t.corners.len(), 1);
        assert_eq!(t.corners[0].1.len(), 4);
    }

    #[test]
    fn area_mismatch_rejected() {
        let err = Template::derive(
            "bad",
            [2.0, 0.0],
            [0.0, 1.0],
            vec![Poly::new([0.5, 0.5], 4, 45.0)],
        );
        assert!(err.is_err());
    }

    #[test]
    fn tiny_torus_rejected_with_minimum() {
        let t = square();
        match t.torus(2, 5, Family::Square.into()) {
            Err(Error::TorusTooSmall { min, .. }) => assert_eq!(min, "3x3"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn window_counts_exterior_edges() {
        let t = square();
        let w = t.window(
            &t.cell_block(0, 2, 0, 2),
            Family::Square.into(),
            Extent::Cells {
                width: 3,
                height: 3,
            },
        );
        let p = &w.patch;
        p.validate().unwrap();
        let center = w.id((1, 1, 0)).unwrap();
        assert_eq!(p.faces[center].exterior_edges, 0);
        assert_eq!(p.faces[w.id((0, 0, 0)).unwrap()].exterior_edges, 2);
        // Interior vertices of a 3x3 block of squares.
        assert_eq!(p.vertices.len(), 4);
    }
}
