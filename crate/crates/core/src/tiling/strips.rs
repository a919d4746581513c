//! Tilings stacked from horizontal hex strips and square strips.
//!
//! Lengths are in polygon sides. A hex strip of height √3 repeats
//! [hexagon, up-triangle, down-triangle] with period 2; hexagon `j` is
//! centered at `offset + 1 + 2j` and touches its neighbors at mid-height.
//! Both boundaries of a hex strip are cut into unit segments starting at
//! `offset + 1/2 + m`: even `m` belongs to hexagon `m/2`, odd `m` to a
//! triangle (up on the bottom boundary, down on the top). A square strip of
//! height 1 has unit squares on `[offset + m, offset + m + 1]`.
//!
//! Faces in consecutive rows are adjacent when their boundary segments
//! overlap in positive length, decided exactly in rationals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::patch::{Extent, Face, LatticeSpec, TilingPatch, Topology, Vertex};
use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

const S3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StripKind {
    Hex,
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StripDesc {
    pub kind: StripKind,
    pub offset: Q,
}

impl StripDesc {
    pub fn hex(offset: Q) -> Self {
        StripDesc {
            kind: StripKind::Hex,
            offset,
        }
    }

    pub fn square(offset: Q) -> Self {
        StripDesc {
            kind: StripKind::Square,
            offset,
        }
    }

    fn height(&self) -> f64 {
        match self.kind {
            StripKind::Hex => S3,
            StripKind::Square => 1.0,
        }
    }

    /// Where unit boundary segments start, modulo 1.
    fn phase(&self) -> Q {
        match self.kind {
            StripKind::Hex => self.offset + Q::new(1, 2),
            StripKind::Square => self.offset,
        }
    }
}

impl fmt::Display for StripDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            StripKind::Hex => "hex",
            StripKind::Square => "square",
        };
        write!(f, "{kind}:{}", self.offset)
    }
}

impl FromStr for StripDesc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (kind, off) = s.trim().split_once(':').unwrap_or((s.trim(), "0"));
        let kind = match kind {
            "hex" | "h" => StripKind::Hex,
            "square" | "sq" | "s" => StripKind::Square,
            other => {
                return Err(Error::InvalidStrips(format!(
                    "unknown strip kind {other:?}"
                )))
            }
        };
        let offset: Q = off
            .trim()
            .parse()
            .map_err(|_| Error::InvalidStrips(format!("bad offset {off:?}")))?;
        Ok(StripDesc { kind, offset })
    }
}

/// Repeating bottom-to-top list of strips.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct StripSequence(pub Vec<StripDesc>);

impl StripSequence {
    pub fn new(strips: Vec<StripDesc>) -> Result<Self> {
        if strips.is_empty() {
            return Err(Error::InvalidStrips("empty sequence".into()));
        }
        Ok(StripSequence(strips))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Strip used by row `r` (row 0 is `self.0[0]`).
    pub fn row(&self, r: i64) -> StripDesc {
        self.0[r.rem_euclid(self.0.len() as i64) as usize]
    }

    /// True when segment endpoints line up across every boundary.
    pub fn is_edge_to_edge(&self) -> bool {
        let n = self.0.len() as i64;
        (0..n).all(|r| {
            let d = self.row(r).phase() - self.row(r + 1).phase();
            d.is_integer()
        })
    }

    /// A thirteen-row stacking using all three strip kinds, bottom to top.
    pub fn mixed_example() -> Self {
        "hex:0,square:1/2,hex:1,hex:0,hex:1,square:1/2,square:1/2,hex:0,hex:0,hex:1,square:1/2,hex:0,hex:0"
            .parse()
            .unwrap()
    }
}

impl fmt::Display for StripSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for StripSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let strips = s
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(StripDesc::from_str)
            .collect::<Result<Vec<_>>>()?;
        StripSequence::new(strips)
    }
}

impl TryFrom<String> for StripSequence {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<StripSequence> for String {
    fn from(s: StripSequence) -> String {
        s.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    Hexagon,
    Up,
    Down,
    Square,
}

/// A face of the infinite strip tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StripFace {
    pub row: i64,
    pub piece: Piece,
    pub j: i64,
}

impl StripFace {
    pub fn sides(&self) -> u32 {
        match self.piece {
            Piece::Hexagon => 6,
            Piece::Up | Piece::Down => 3,
            Piece::Square => 4,
        }
    }

    pub fn is_triangle(&self) -> bool {
        matches!(self.piece, Piece::Up | Piece::Down)
    }
}

/// A corner point, exact. `Line(b, x)` lies on the boundary below row `b`;
/// `Mid(r, x)` at mid-height of hex row `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Point {
    Line(i64, Q),
    Mid(i64, Q),
}

#[derive(Debug, Clone)]
pub struct StripPlane {
    pub seq: StripSequence,
}

impl StripPlane {
    pub fn new(seq: StripSequence) -> Self {
        StripPlane { seq }
    }

    /// Bottom y coordinate of row `r`.
    pub fn row_bottom(&self, r: i64) -> f64 {
        let n = self.seq.len() as i64;
        let period: f64 = self.seq.0.iter().map(StripDesc::height).sum();
        let q = r.div_euclid(n);
        let rem = r.rem_euclid(n);
        q as f64 * period + (0..rem).map(|i| self.seq.row(i).height()).sum::<f64>()
    }

    /// Horizontal center, exact.
    pub fn center_x(&self, f: StripFace) -> Q {
        let o = self.seq.row(f.row).offset;
        match f.piece {
            Piece::Hexagon => o + 1 + Q::from(2 * f.j),
            Piece::Up | Piece::Down => o + 2 + Q::from(2 * f.j),
            Piece::Square => o + Q::new(2 * f.j + 1, 2),
        }
    }

    pub fn center(&self, f: StripFace) -> [f64; 2] {
        let y0 = self.row_bottom(f.row);
        let x = self.center_x(f).to_f64().unwrap();
        let y = match f.piece {
            Piece::Hexagon => y0 + S3 / 2.0,
            Piece::Up => y0 + S3 / 6.0,
            Piece::Down => y0 + S3 - S3 / 6.0,
            Piece::Square => y0 + 0.5,
        };
        [x, y]
    }

    fn segment_face(&self, row: i64, m: i64, bottom: bool) -> StripFace {
        match self.seq.row(row).kind {
            StripKind::Square => StripFace {
                row,
                piece: Piece::Square,
                j: m,
            },
            StripKind::Hex if m.rem_euclid(2) == 0 => StripFace {
                row,
                piece: Piece::Hexagon,
                j: m.div_euclid(2),
            },
            StripKind::Hex => StripFace {
                row,
                piece: if bottom { Piece::Up } else { Piece::Down },
                j: m.div_euclid(2),
            },
        }
    }

    /// Start of the face's top or bottom unit segment, if it has one.
    pub(crate) fn segment(&self, f: StripFace, top: bool) -> Option<Q> {
        let o = self.seq.row(f.row).offset;
        let half = Q::new(1, 2);
        match f.piece {
            Piece::Hexagon => Some(o + half + Q::from(2 * f.j)),
            Piece::Up if !top => Some(o + half + Q::from(2 * f.j + 1)),
            Piece::Down if top => Some(o + half + Q::from(2 * f.j + 1)),
            Piece::Square => Some(o + Q::from(f.j)),
            _ => None,
        }
    }

    /// Faces of `row` whose segment on the given side overlaps `[s, s+1]`
    /// in positive length.
    fn overlapping(&self, row: i64, s: Q, bottom_of_row: bool) -> Vec<StripFace> {
        let base = s - self.seq.row(row).phase();
        let lo = base.floor().to_integer();
        let ms: Vec<i64> = if base.is_integer() {
            vec![lo]
        } else {
            vec![lo, lo + 1]
        };
        ms.into_iter()
            .map(|m| self.segment_face(row, m, bottom_of_row))
            .collect()
    }

    /// Neighbors in the infinite tiling.
    pub fn neighbors(&self, f: StripFace) -> Vec<StripFace> {
        let r = f.row;
        let mut out = Vec::new();
        let at = |piece, j| StripFace { row: r, piece, j };
        match f.piece {
            Piece::Hexagon => {
                out.extend([
                    at(Piece::Up, f.j),
                    at(Piece::Down, f.j),
                    at(Piece::Up, f.j - 1),
                    at(Piece::Down, f.j - 1),
                ]);
            }
            Piece::Up | Piece::Down => {
                out.extend([at(Piece::Hexagon, f.j), at(Piece::Hexagon, f.j + 1)])
            }
            Piece::Square => out.extend([at(Piece::Square, f.j - 1), at(Piece::Square, f.j + 1)]),
        }
        if let Some(s) = self.segment(f, true) {
            out.extend(self.overlapping(r + 1, s, true));
        }
        if let Some(s) = self.segment(f, false) {
            out.extend(self.overlapping(r - 1, s, false));
        }
        out
    }

    /// Corners in counterclockwise order.
    fn corners(&self, f: StripFace) -> Vec<Point> {
        let r = f.row;
        let o = self.seq.row(r).offset;
        let x = |d: Q| o + d + Q::from(2 * f.j);
        let h = |n: i64| Q::new(n, 2);
        match f.piece {
            Piece::Hexagon => vec![
                Point::Line(r, x(h(1))),
                Point::Line(r, x(h(3))),
                Point::Mid(r, x(h(4))),
                Point::Line(r + 1, x(h(3))),
                Point::Line(r + 1, x(h(1))),
                Point::Mid(r, x(h(0))),
            ],
            Piece::Up => vec![
                Point::Line(r, x(h(3))),
                Point::Line(r, x(h(5))),
                Point::Mid(r, x(h(4))),
            ],
            Piece::Down => vec![
                Point::Mid(r, x(h(4))),
                Point::Line(r + 1, x(h(5))),
                Point::Line(r + 1, x(h(3))),
            ],
            Piece::Square => {
                let a = o + Q::from(f.j);
                vec![
                    Point::Line(r, a),
                    Point::Line(r, a + 1),
                    Point::Line(r + 1, a + 1),
                    Point::Line(r + 1, a),
                ]
            }
        }
    }

    fn point_xy(&self, p: Point) -> [f64; 2] {
        match p {
            Point::Line(b, x) => [x.to_f64().unwrap(), self.row_bottom(b)],
            Point::Mid(r, x) => [x.to_f64().unwrap(), self.row_bottom(r) + S3 / 2.0],
        }
    }

    pub fn polygon(&self, f: StripFace) -> Vec<[f64; 2]> {
        self.corners(f)
            .into_iter()
            .map(|p| self.point_xy(p))
            .collect()
    }

    /// Faces of `row` with center x in `[lo, hi]`.
    pub fn row_faces(&self, row: i64, lo: Q, hi: Q) -> Vec<StripFace> {
        let o = self.seq.row(row).offset;
        let mut out = Vec::new();
        match self.seq.row(row).kind {
            StripKind::Hex => {
                let j0 = ((lo - o - 2) / 2).floor().to_integer() - 1;
                let j1 = ((hi - o - 1) / 2).ceil().to_integer() + 1;
                for j in j0..=j1 {
                    for piece in [Piece::Hexagon, Piece::Up, Piece::Down] {
                        let f = StripFace { row, piece, j };
                        let cx = self.center_x(f);
                        if cx >= lo && cx <= hi {
                            out.push(f);
                        }
                    }
                }
            }
            StripKind::Square => {
                let j0 = (lo - o).floor().to_integer() - 1;
                let j1 = (hi - o).ceil().to_integer() + 1;
                for j in j0..=j1 {
                    let f = StripFace {
                        row,
                        piece: Piece::Square,
                        j,
                    };
                    let cx = self.center_x(f);
                    if cx >= lo && cx <= hi {
                        out.push(f);
                    }
                }
            }
        }
        out.sort_by_key(|f| (self.center_x(*f), f.piece));
        out
    }

    /// Open patch on the listed faces. `exterior_edges` counts neighbors of
    /// the infinite tiling that fell outside.
    pub fn window(&self, faces: &[StripFace], extent: Extent) -> StripWindow {
        let index: HashMap<StripFace, usize> =
            faces.iter().enumerate().map(|(n, &f)| (f, n)).collect();
        let patch_faces = faces
            .iter()
            .map(|&f| {
                let all = self.neighbors(f);
                let neighbors: Vec<usize> =
                    all.iter().filter_map(|g| index.get(g).copied()).collect();
                Face {
                    sides: f.sides(),
                    exterior_edges: (all.len() - neighbors.len()) as u32,
                    neighbors,
                    center: self.center(f),
                    polygon: self.polygon(f),
                }
            })
            .collect();
        let vertices = self.complete_vertices(faces, |g| index.get(&g).copied(), |p| p);
        StripWindow {
            patch: TilingPatch {
                spec: LatticeSpec::Strips {
                    sequence: self.seq.clone(),
                },
                topology: Topology::Open,
                extent,
                faces: patch_faces,
                vertices,
                edge_to_edge: self.seq.is_edge_to_edge(),
            },
            faces: faces.to_vec(),
            index,
        }
    }

    /// Vertices whose incident faces all map to patch ids and whose angles
    /// close up to 360 degrees. T-junctions never close.
    fn complete_vertices(
        &self,
        faces: &[StripFace],
        id: impl Fn(StripFace) -> Option<usize>,
        wrap: impl Fn(Point) -> Point,
    ) -> Vec<Vertex> {
        let mut at: BTreeMap<Point, Vec<(usize, Point)>> = BTreeMap::new();
        for &f in faces {
            let Some(i) = id(f) else { continue };
            for p in self.corners(f) {
                at.entry(wrap(p)).or_default().push((i, p));
            }
        }
        let angle = |sides: u32| 180 - 360 / sides;
        let mut out = Vec::new();
        for (_, incident) in at {
            let total: u32 = incident
                .iter()
                .map(|&(i, _)| angle(faces_sides(faces, i)))
                .sum();
            if total != 360 {
                continue;
            }
            // Order around the unwrapped position seen from the first face.
            let (_, p0) = incident[0];
            let pos = self.point_xy(p0);
            let mut ring: Vec<(f64, usize)> = incident
                .iter()
                .map(|&(i, p)| {
                    let c = self.center(faces[i]);
                    let q = self.point_xy(p);
                    let (dx, dy) = (c[0] - q[0], c[1] - q[1]);
                    (dy.atan2(dx), i)
                })
                .collect();
            ring.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            out.push(Vertex {
                faces: ring.into_iter().map(|(_, i)| i).collect(),
                position: pos,
            });
        }
        out
    }
}

fn faces_sides(faces: &[StripFace], i: usize) -> u32 {
    faces[i].sides()
}

#[derive(Debug, Clone)]
pub struct StripWindow {
    pub patch: TilingPatch,
    pub faces: Vec<StripFace>,
    pub index: HashMap<StripFace, usize>,
}

impl StripWindow {
    pub fn id(&self, f: StripFace) -> Option<usize> {
        self.index.get(&f).copied()
    }
}

/// Open patch of `rows` rows (row 0 at the bottom) holding the faces with
/// center in `[0, width]`, or a torus of `rows` rows and circumference
/// `width`.
pub fn build_strip_tiling(
    seq: &StripSequence,
    rows: u32,
    width: u32,
    topology: Topology,
) -> Result<TilingPatch> {
    if seq.is_empty() {
        return Err(Error::InvalidStrips("empty sequence".into()));
    }
    if rows == 0 || width == 0 {
        return Err(Error::InvalidExtent("strip extent must be positive".into()));
    }
    let plane = StripPlane::new(seq.clone());
    let extent = Extent::Rows { rows, width };
    match topology {
        Topology::Open => {
            let faces: Vec<StripFace> = (0..rows as i64)
                .flat_map(|r| plane.row_faces(r, Q::zero(), Q::from(width as i64)))
                .collect();
            let w = plane.window(&faces, extent);
            w.patch.validate()?;
            Ok(w.patch)
        }
        Topology::Torus => strip_torus(&plane, rows, width, extent),
    }
}

fn strip_torus(plane: &StripPlane, rows: u32, width: u32, extent: Extent) -> Result<TilingPatch> {
    let n = plane.seq.len() as u32;
    if !width.is_multiple_of(2) || width < 4 {
        return Err(Error::InvalidExtent(format!(
            "torus width must be even and at least 4, got {width}"
        )));
    }
    if !rows.is_multiple_of(n) || rows < 3 {
        return Err(Error::InvalidExtent(format!(
            "torus rows must be a multiple of the sequence length {n} and at least 3, got {rows}"
        )));
    }
    let (w, h) = (width as i64, rows as i64);
    let canon = |f: StripFace| {
        let row = f.row.rem_euclid(h);
        let period = match f.piece {
            Piece::Square => w,
            _ => w / 2,
        };
        StripFace {
            row,
            piece: f.piece,
            j: f.j.rem_euclid(period),
        }
    };
    let mut faces = Vec::new();
    for r in 0..h {
        match plane.seq.row(r).kind {
            StripKind::Hex => {
                for j in 0..w / 2 {
                    for piece in [Piece::Hexagon, Piece::Up, Piece::Down] {
                        faces.push(StripFace { row: r, piece, j });
                    }
                }
            }
            StripKind::Square => faces.extend((0..w).map(|j| StripFace {
                row: r,
                piece: Piece::Square,
                j,
            })),
        }
    }
    let index: HashMap<StripFace, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let patch_faces: Vec<Face> = faces
        .iter()
        .map(|&f| {
            let neighbors: Vec<usize> = plane
                .neighbors(f)
                .into_iter()
                .map(|g| index[&canon(g)])
                .collect();
            Face {
                sides: f.sides(),
                neighbors,
                exterior_edges: 0,
                center: plane.center(f),
                polygon: plane.polygon(f),
            }
        })
        .collect();
    let wq = Q::from(w);
    let wrap = |p: Point| {
        let x_mod = |x: Q| x - wq * (x / wq).floor();
        match p {
            Point::Line(b, x) => Point::Line(b.rem_euclid(h), x_mod(x)),
            Point::Mid(r, x) => Point::Mid(r.rem_euclid(h), x_mod(x)),
        }
    };
    let vertices = plane.complete_vertices(&faces, |g| index.get(&canon(g)).copied(), wrap);
    let patch = TilingPatch {
        spec: LatticeSpec::Strips {
            sequence: plane.seq.clone(),
        },
        topology: Topology::Torus,
        extent,
        faces: patch_faces,
        vertices,
        edge_to_edge: plane.seq.is_edge_to_edge(),
    };
    patch.validate()?;
    Ok(patch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::archimedean::build_archimedean;
    use crate::tiling::patch::Family;

    fn seq(s: &str) -> StripSequence {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let s = seq("hex:0,hex:1/2,square:0");
        assert_eq!(s.to_string(), "hex:0,hex:1/2,square:0");
        assert!("".parse::<StripSequence>().is_err());
        assert!("tri:0".parse::<StripSequence>().is_err());
        assert!("hex:x".parse::<StripSequence>().is_err());
    }

    #[test]
    fn squares_make_the_square_lattice() {
        let p = build_strip_tiling(&seq("square:0"), 6, 6, Topology::Torus).unwrap();
        let q = build_archimedean(
            Family::Square,
            Extent::Cells {
                width: 6,
                height: 6,
            },
            Topology::Torus,
        )
        .unwrap();
        assert_eq!(p.len(), q.len());
        // Face (r, m) sits at id r*6+m in both.
        for (i, f) in p.faces.iter().enumerate() {
            let mut a = f.neighbors.clone();
            let mut b = q.faces[i].neighbors.clone();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
        assert_eq!(
            p.vertex_census().keys().next().unwrap().to_string(),
            "4.4.4.4"
        );
    }

    #[test]
    fn aligned_hex_strips() {
        let plane = StripPlane::new(seq("hex:0"));
        let hex = StripFace {
            row: 0,
            piece: Piece::Hexagon,
            j: 0,
        };
        let n = plane.neighbors(hex);
        assert!(n.contains(&StripFace {
            row: 1,
            piece: Piece::Hexagon,
            j: 0
        }));
        let down = StripFace {
            row: 0,
            piece: Piece::Down,
            j: 0,
        };
        assert!(plane.neighbors(down).contains(&StripFace {
            row: 1,
            piece: Piece::Up,
            j: 0
        }));
        let p = build_strip_tiling(&seq("hex:0"), 4, 8, Topology::Torus).unwrap();
        let names: Vec<String> = p.vertex_census().keys().map(|t| t.to_string()).collect();
        assert_eq!(names, vec!["3.3.6.6", "3.6.3.6"]);
    }

    #[test]
    fn offset_one_is_kagome() {
        let p = build_strip_tiling(&seq("hex:0,hex:1"), 4, 8, Topology::Torus).unwrap();
        let names: Vec<String> = p.vertex_census().keys().map(|t| t.to_string()).collect();
        assert_eq!(names, vec!["3.6.3.6"]);
        assert!(p.faces.iter().all(|f| f.neighbors.len() as u32 == f.sides));
    }

    #[test]
    fn half_offset_hexagon_edge_meets_two_faces() {
        let plane = StripPlane::new(seq("hex:0,hex:1/2"));
        for j in 0..4 {
            let f = StripFace {
                row: 0,
                piece: Piece::Hexagon,
                j,
            };
            let above: Vec<_> = plane
                .neighbors(f)
                .into_iter()
                .filter(|g| g.row == 1)
                .collect();
            assert_eq!(above.len(), 2);
        }
        let p = build_strip_tiling(&seq("hex:0,hex:1/2"), 4, 8, Topology::Torus).unwrap();
        assert!(!p.edge_to_edge);
        assert!(p.faces.iter().any(|f| f.neighbors.len() as u32 > f.sides));
    }

    #[test]
    fn hex_over_square_gives_3446() {
        let p = build_strip_tiling(&seq("hex:0,square:1/2"), 4, 8, Topology::Torus).unwrap();
        let names: Vec<String> = p.vertex_census().keys().map(|t| t.to_string()).collect();
        assert!(names.contains(&"3.4.4.6".to_string()), "{names:?}");
    }

    #[test]
    fn torus_guards() {
        assert!(build_strip_tiling(&seq("hex:0"), 3, 5, Topology::Torus).is_err());
        assert!(build_strip_tiling(&seq("hex:0,square:0"), 3, 8, Topology::Torus).is_err());
        assert!(build_strip_tiling(&seq("hex:0"), 0, 8, Topology::Open).is_err());
    }

    #[test]
    fn mixed_stacking_is_valid() {
        let s = StripSequence::mixed_example();
        let p = build_strip_tiling(&s, 13, 20, Topology::Open).unwrap();
        p.validate().unwrap();
        let census = p.vertex_census();
        assert!(census.keys().any(|t| t.to_string() == "3.4.4.6"));
        assert!(census.keys().all(|t| t.is_catalog()));
    }
}
