//! Small face sets with their internal adjacency.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tiling::TilingPatch;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFace {
    pub sides: u32,
    pub neighbors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub name: String,
    pub faces: Vec<ConfigFace>,
}

impl Configuration {
    /// Builds and validates from side counts and neighbor lists.
    pub fn new(name: &str, sides: Vec<u32>, adjacency: Vec<Vec<usize>>) -> Result<Self> {
        if sides.len() != adjacency.len() {
            return Err(Error::InvalidConfiguration(format!(
                "{name}: {} sides for {} faces",
                sides.len(),
                adjacency.len()
            )));
        }
        let faces = sides
            .into_iter()
            .zip(adjacency)
            .map(|(sides, mut neighbors)| {
                neighbors.sort_unstable();
                ConfigFace { sides, neighbors }
            })
            .collect();
        let c = Configuration {
            name: name.to_string(),
            faces,
        };
        c.validate()?;
        Ok(c)
    }

    /// From undirected edges.
    pub fn from_edges(name: &str, sides: Vec<u32>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); sides.len()];
        for &(a, b) in edges {
            if a >= sides.len() || b >= sides.len() {
                return Err(Error::InvalidConfiguration(format!(
                    "{name}: edge ({a}, {b}) out of range"
                )));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Self::new(name, sides, adj)
    }

    /// The sub-configuration of `patch` induced on `faces`.
    pub fn from_patch(name: &str, patch: &TilingPatch, faces: &[usize]) -> Result<Self> {
        let sides = faces.iter().map(|&f| patch.sides(f)).collect();
        let adj = faces
            .iter()
            .map(|&f| {
                (0..faces.len())
                    .filter(|&j| patch.are_adjacent(f, faces[j]))
                    .collect()
            })
            .collect();
        Self::new(name, sides, adj)
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.faces[a].neighbors.binary_search(&b).is_ok()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.faces.len();
        if n == 0 {
            return Err(Error::EmptyFaceSet);
        }
        for (i, f) in self.faces.iter().enumerate() {
            let distinct: BTreeSet<_> = f.neighbors.iter().collect();
            if distinct.len() != f.neighbors.len() {
                return Err(Error::InvalidConfiguration(format!(
                    "{}: face {i} repeats a neighbor",
                    self.name
                )));
            }
            for &j in &f.neighbors {
                if j >= n || j == i || !self.faces[j].neighbors.contains(&i) {
                    return Err(Error::InvalidConfiguration(format!(
                        "{}: bad edge {i}-{j}",
                        self.name
                    )));
                }
            }
            if f.neighbors.len() as u32 > f.sides {
                return Err(Error::InvalidConfiguration(format!(
                    "{}: face {i} has too many neighbors",
                    self.name
                )));
            }
        }
        if self.bfs_order().len() != n {
            return Err(Error::InvalidConfiguration(format!(
                "{} is not connected",
                self.name
            )));
        }
        Ok(())
    }

    /// Breadth-first order from face 0, each face (after the first) paired
    /// with an earlier neighbor.
    pub fn bfs_order(&self) -> Vec<(usize, Option<usize>)> {
        let mut seen = vec![false; self.faces.len()];
        if self.faces.is_empty() {
            return vec![];
        }
        let mut order = vec![(0, None)];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(f) = queue.pop_front() {
            for &g in &self.faces[f].neighbors {
                if !seen[g] {
                    seen[g] = true;
                    order.push((g, Some(f)));
                    queue.push_back(g);
                }
            }
        }
        order
    }

    pub fn count_with_sides(&self, sides: u32) -> usize {
        self.faces.iter().filter(|f| f.sides == sides).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_and_disconnected() {
        assert!(Configuration::new("x", vec![3, 3], vec![vec![1], vec![]]).is_err());
        assert!(Configuration::new("x", vec![3, 3], vec![vec![], vec![]]).is_err());
        assert!(Configuration::new("x", vec![], vec![]).is_err());
        assert!(Configuration::from_edges("pair", vec![3, 3], &[(0, 1)]).is_ok());
    }

    #[test]
    fn bfs_parents_are_neighbors() {
        let c =
            Configuration::from_edges("path", vec![4, 4, 4, 4], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        for (f, parent) in c.bfs_order() {
            if let Some(p) = parent {
                assert!(c.adjacent(f, p));
            }
        }
    }
}
