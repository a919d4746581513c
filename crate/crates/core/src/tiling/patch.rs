//! Finite face-adjacency windows of a tiling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::strips::StripSequence;
use super::vertex_type::VertexType;
use crate::error::{Error, Result};

/// The eleven Archimedean lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "3.3.3.3.3.3")]
    Tri,
    #[serde(rename = "3.3.3.3.6")]
    SnubHex,
    #[serde(rename = "3.3.3.4.4")]
    ElongatedTri,
    #[serde(rename = "3.3.4.3.4")]
    SnubSquare,
    #[serde(rename = "3.4.6.4")]
    Rhombitrihex,
    #[serde(rename = "3.6.3.6")]
    Kagome,
    #[serde(rename = "4.4.4.4")]
    Square,
    #[serde(rename = "3.12.12")]
    TruncatedHex,
    #[serde(rename = "4.6.12")]
    TruncatedTrihex,
    #[serde(rename = "4.8.8")]
    TruncatedSquare,
    #[serde(rename = "6.6.6")]
    Hex,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Tri,
        Family::SnubHex,
        Family::ElongatedTri,
        Family::SnubSquare,
        Family::Rhombitrihex,
        Family::Kagome,
        Family::Square,
        Family::TruncatedHex,
        Family::TruncatedTrihex,
        Family::TruncatedSquare,
        Family::Hex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tri => "3.3.3.3.3.3",
            Family::SnubHex => "3.3.3.3.6",
            Family::ElongatedTri => "3.3.3.4.4",
            Family::SnubSquare => "3.3.4.3.4",
            Family::Rhombitrihex => "3.4.6.4",
            Family::Kagome => "3.6.3.6",
            Family::Square => "4.4.4.4",
            Family::TruncatedHex => "3.12.12",
            Family::TruncatedTrihex => "4.6.12",
            Family::TruncatedSquare => "4.8.8",
            Family::Hex => "6.6.6",
        }
    }

    pub fn vertex_type(self) -> VertexType {
        self.name().parse().expect("family names are catalog types")
    }

    /// Percolation threshold of the infinite lattice.
    pub fn threshold(self) -> u32 {
        match self {
            Family::Tri
            | Family::SnubHex
            | Family::ElongatedTri
            | Family::SnubSquare
            | Family::Rhombitrihex => 1,
            Family::Kagome | Family::Square => 2,
            Family::TruncatedHex
            | Family::TruncatedTrihex
            | Family::TruncatedSquare
            | Family::Hex => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: VertexType = s.parse().map_err(|_| Error::UnknownFamily(s.to_string()))?;
        Family::ALL
            .into_iter()
            .find(|f| f.vertex_type() == t)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// What a patch is a window of.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LatticeSpec {
    Archimedean {
        family: Family,
    },
    Strips {
        sequence: StripSequence,
    },
    /// (6.6.6) with the listed hexagons each split into six triangles.
    ModifiedHex {
        substitutions: Vec<usize>,
    },
    /// (3.4.6.4) with one rosette in four merged into a 12-gon; the
    /// 2-uniform tiling with vertex types 3.4.6.4 and 4.6.12.
    MergedRosettes,
}

impl LatticeSpec {
    pub fn family(&self) -> Option<Family> {
        match self {
            LatticeSpec::Archimedean { family } => Some(*family),
            _ => None,
        }
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeSpec::Archimedean { family } => write!(f, "({family})"),
            LatticeSpec::Strips { sequence } => write!(f, "strips[{sequence}]"),
            LatticeSpec::ModifiedHex { substitutions } => {
                write!(f, "(6.6.6)+{} substitutions", substitutions.len())
            }
            LatticeSpec::MergedRosettes => write!(f, "[3.4.6.4; 4.6.12]"),
        }
    }
}

impl From<Family> for LatticeSpec {
    fn from(family: Family) -> Self {
        LatticeSpec::Archimedean { family }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Topology {
    Torus,
    Open,
}

impl FromStr for Topology {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "torus" => Ok(Topology::Torus),
            "open" => Ok(Topology::Open),
            _ => Err(Error::InvalidExtent(format!("unknown topology {s:?}"))),
        }
    }
}

/// Generation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Extent {
    /// Parallelogram of translation cells.
    Cells { width: u32, height: u32 },
    /// Ring window of radius `t` about a central face.
    Radius { t: u32 },
    /// Strip rows and horizontal width in side lengths.
    Rows { rows: u32, width: u32 },
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Cells { width, height } => write!(f, "{width}x{height}"),
            Extent::Radius { t } => write!(f, "t={t}"),
            Extent::Rows { rows, width } => write!(f, "{rows}rows/{width}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Face {
    pub sides: u32,
    pub neighbors: Vec<usize>,
    pub exterior_edges: u32,
    pub center: [f64; 2],
    /// Corner coordinates, counterclockwise. Rendering only.
    #[serde(default)]
    pub polygon: Vec<[f64; 2]>,
}

/// A vertex all of whose incident faces are in the patch, faces listed in
/// rotational order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub faces: Vec<usize>,
    pub position: [f64; 2],
}

pub const PATCH_TAG: &str = "percolattice-patch-v1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingPatch {
    pub spec: LatticeSpec,
    pub topology: Topology,
    pub extent: Extent,
    pub faces: Vec<Face>,
    #[serde(default)]
    pub vertices: Vec<Vertex>,
    /// False for strip stackings whose boundaries have T-junctions; then a
    /// face's side count and its neighbor count are unrelated.
    #[serde(default = "yes")]
    pub edge_to_edge: bool,
}

fn yes() -> bool {
    true
}

#[derive(Serialize, Deserialize)]
struct Tagged<T> {
    format: String,
    #[serde(flatten)]
    patch: T,
}

impl TilingPatch {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn neighbors(&self, f: usize) -> &[usize] {
        &self.faces[f].neighbors
    }

    pub fn sides(&self, f: usize) -> u32 {
        self.faces[f].sides
    }

    pub fn max_degree(&self) -> usize {
        self.faces
            .iter()
            .map(|f| f.neighbors.len())
            .max()
            .unwrap_or(0)
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.faces[a].neighbors.contains(&b)
    }

    pub fn faces_with_sides(&self, sides: u32) -> Vec<usize> {
        (0..self.len())
            .filter(|&f| self.faces[f].sides == sides)
            .collect()
    }

    /// Faces whose whole neighborhood is present.
    pub fn is_clipped(&self, f: usize) -> bool {
        self.faces[f].exterior_edges > 0
    }

    /// Checks every structural invariant face by face.
    pub fn validate(&self) -> Result<()> {
        let n = self.faces.len();
        for (i, face) in self.faces.iter().enumerate() {
            if face.sides < 3 {
                return Err(Error::InvalidPatch(format!(
                    "face {i} has {} sides",
                    face.sides
                )));
            }
            let mut seen = BTreeSet::new();
            for &j in &face.neighbors {
                if j >= n {
                    return Err(Error::FaceOutOfRange(j, n));
                }
                if j == i {
                    return Err(Error::InvalidPatch(format!("face {i} is its own neighbor")));
                }
                if !seen.insert(j) {
                    return Err(Error::InvalidPatch(format!("face {i} lists {j} twice")));
                }
                if !self.faces[j].neighbors.contains(&i) {
                    return Err(Error::InvalidPatch(format!("{i}->{j} is not symmetric")));
                }
            }
            if self.edge_to_edge {
                let total = face.neighbors.len() as u32 + face.exterior_edges;
                if total != face.sides {
                    return Err(Error::InvalidPatch(format!(
                        "face {i}: {} neighbors + {} exterior != {} sides",
                        face.neighbors.len(),
                        face.exterior_edges,
                        face.sides
                    )));
                }
            }
            if self.topology == Topology::Torus && face.exterior_edges != 0 {
                return Err(Error::InvalidPatch(format!(
                    "torus face {i} has exterior edges"
                )));
            }
        }
        for (t, _) in self.vertex_census() {
            if !t.is_catalog() {
                return Err(Error::InvalidPatch(format!(
                    "vertex type {t} not in catalog"
                )));
            }
        }
        Ok(())
    }

    /// Interior vertices counted by canonical type.
    pub fn vertex_census(&self) -> BTreeMap<VertexType, usize> {
        let mut out = BTreeMap::new();
        for v in &self.vertices {
            let sizes: Vec<u32> = v.faces.iter().map(|&f| self.faces[f].sides).collect();
            match VertexType::canonicalize(&sizes) {
                Ok(t) => *out.entry(t).or_insert(0) += 1,
                Err(_) => continue,
            }
        }
        out
    }

    /// Multiset of (sides, sorted neighbor sides), the local signature used
    /// to compare extents.
    pub fn signature_multiset(&self) -> BTreeMap<(u32, Vec<u32>), usize> {
        let mut out = BTreeMap::new();
        for face in &self.faces {
            let mut ns: Vec<u32> = face
                .neighbors
                .iter()
                .map(|&j| self.faces[j].sides)
                .collect();
            ns.sort_unstable();
            *out.entry((face.sides, ns)).or_insert(0) += 1;
        }
        out
    }

    /// Signature kinds, ignoring multiplicity.
    pub fn signature_set(&self) -> BTreeSet<(u32, Vec<u32>)> {
        self.signature_multiset().into_keys().collect()
    }

    /// Breadth-first graph distance from `start`.
    pub fn distances_from(&self, start: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = Some(0);
        queue.push_back(start);
        while let Some(f) = queue.pop_front() {
            let d = dist[f].unwrap();
            for &g in &self.faces[f].neighbors {
                if dist[g].is_none() {
                    dist[g] = Some(d + 1);
                    queue.push_back(g);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Tagged JSON.
    pub fn to_json(&self) -> Result<String> {
        let tagged = Tagged {
            format: PATCH_TAG.to_string(),
            patch: self,
        };
        Ok(serde_json::to_string_pretty(&tagged)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let tagged: Tagged<TilingPatch> = serde_json::from_str(text)?;
        if tagged.format != PATCH_TAG {
            return Err(Error::InvalidPatch(format!(
                "unknown format tag {:?}",
                tagged.format
            )));
        }
        tagged.patch.validate()?;
        Ok(tagged.patch)
    }

    /// Induced sub-patch on `keep`, returned with the old-to-new index map.
    /// Dropped neighbors become exterior edges and only vertices whose
    /// faces all survive are retained.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> (TilingPatch, BTreeMap<usize, usize>) {
        let map: BTreeMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let faces = keep
            .iter()
            .map(|&old| {
                let f = &self.faces[old];
                let neighbors: Vec<usize> = f
                    .neighbors
                    .iter()
                    .filter_map(|g| map.get(g).copied())
                    .collect();
                let lost = (f.neighbors.len() - neighbors.len()) as u32;
                Face {
                    sides: f.sides,
                    exterior_edges: f.exterior_edges + lost,
                    neighbors,
                    center: f.center,
                    polygon: f.polygon.clone(),
                }
            })
            .collect();
        let vertices = self
            .vertices
            .iter()
            .filter(|v| v.faces.iter().all(|f| map.contains_key(f)))
            .map(|v| Vertex {
                faces: v.faces.iter().map(|f| map[f]).collect(),
                position: v.position,
            })
            .collect();
        let patch = TilingPatch {
            spec: self.spec.clone(),
            topology: Topology::Open,
            extent: self.extent,
            faces,
            vertices,
            edge_to_edge: self.edge_to_edge,
        };
        (patch, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> TilingPatch {
        // Two squares sharing one edge.
        let face = |n: Vec<usize>| Face {
            sides: 4,
            exterior_edges: 4 - n.len() as u32,
            neighbors: n,
            center: [0.0; 2],
            polygon: vec![],
        };
        TilingPatch {
            spec: Family::Square.into(),
            topology: Topology::Open,
            extent: Extent::Cells {
                width: 2,
                height: 1,
            },
            faces: vec![face(vec![1]), face(vec![0])],
            vertices: vec![],
            edge_to_edge: true,
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            assert_eq!(format!("({f})").parse::<Family>().unwrap(), f);
        }
        assert_eq!("6.3.6.3".parse::<Family>().unwrap(), Family::Kagome);
        assert!("3.3.6.6".parse::<Family>().is_err());
    }

    #[test]
    fn validate_catches_asymmetry() {
        let mut p = tiny();
        assert!(p.validate().is_ok());
        p.faces[1].neighbors.clear();
        p.faces[1].exterior_edges = 4;
        assert!(p.validate().is_err());
    }

    #[test]
    fn json_round_trip_keeps_tag() {
        let p = tiny();
        let text = p.to_json().unwrap();
        assert!(text.contains(PATCH_TAG));
        assert_eq!(TilingPatch::from_json(&text).unwrap(), p);
        let bad = text.replace(PATCH_TAG, "other");
        assert!(TilingPatch::from_json(&bad).is_err());
    }

    #[test]
    fn induced_counts_lost_edges() {
        let p = tiny();
        let (q, map) = p.induced(&[0].into_iter().collect());
        assert_eq!(map[&0], 0);
        assert_eq!(q.faces[0].exterior_edges, 4);
        assert!(q.validate().is_ok());
    }
}
