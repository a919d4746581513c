//! Named blocking configurations, each with the tiling it lives in.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::blocking::verify_blocking;
use super::config::Configuration;
use super::matching::find_copies;
use crate::error::Result;
use crate::tiling::{
    build_archimedean, build_merged_rosettes, build_strip_tiling, Extent, Family, StripSequence,
    TilingPatch, Topology,
};

/// Where a configuration appears.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Home {
    Lattice { family: Family },
    MergedRosettes,
    Strips { sequence: StripSequence },
}

impl Home {
    fn strips(s: &str) -> Home {
        Home::Strips {
            sequence: s.parse().expect("static strip sequence"),
        }
    }

    /// A torus large enough to hold the configuration many times over.
    pub fn torus(&self) -> Result<TilingPatch> {
        match self {
            Home::Lattice { family } => build_archimedean(
                *family,
                Extent::Cells {
                    width: 6,
                    height: 6,
                },
                Topology::Torus,
            ),
            Home::MergedRosettes => build_merged_rosettes(4, 4),
            Home::Strips { sequence } => {
                let reps = 6_usize.div_ceil(sequence.len());
                build_strip_tiling(
                    sequence,
                    (reps * sequence.len()) as u32,
                    16,
                    Topology::Torus,
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub config: Configuration,
    /// Blocking holds at this `k` and fails at `k - 1`.
    pub k: u32,
    pub home: Home,
}

fn cyc(n: usize, i: usize, d: usize) -> usize {
    (i + d) % n
}

fn rosette_3464() -> Configuration {
    // 0 hexagon, 1..=6 squares, 7..=12 triangles between consecutive squares.
    let mut sides = vec![6];
    sides.extend([4; 6]);
    sides.extend([3; 6]);
    let mut edges = Vec::new();
    for i in 0..6 {
        edges.push((0, 1 + i));
        edges.push((7 + i, 1 + i));
        edges.push((7 + i, 1 + cyc(6, i, 1)));
    }
    Configuration::from_edges("(3.4.6.4)-fig0", sides, &edges).unwrap()
}

fn grid_488() -> Configuration {
    // Octagons (i, j), i < 3, j < 2, then squares (a, b), a <= 3, b <= 2.
    let oct = |i: usize, j: usize| i * 2 + j;
    let sq = |a: usize, b: usize| 6 + a * 3 + b;
    let mut sides = vec![8; 6];
    sides.extend([4; 12]);
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..2 {
            if i + 1 < 3 {
                edges.push((oct(i, j), oct(i + 1, j)));
            }
            if j + 1 < 2 {
                edges.push((oct(i, j), oct(i, j + 1)));
            }
            for (a, b) in [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)] {
                edges.push((oct(i, j), sq(a, b)));
            }
        }
    }
    Configuration::from_edges("(4.8.8)-fig0", sides, &edges).unwrap()
}

fn witness_31() -> Configuration {
    // D, then H_i, S_i, T_i, A_i, B_i for i in 0..6.
    let (h, s, t, a, b) = (|i| 1 + i, |i| 7 + i, |i| 13 + i, |i| 19 + i, |i| 25 + i);
    let mut sides = vec![12];
    sides.extend([6; 6]);
    sides.extend([4; 6]);
    sides.extend([3; 6]);
    sides.extend([4; 12]);
    let mut edges = Vec::new();
    for i in 0..6 {
        let j = cyc(6, i, 1);
        edges.extend([
            (0, h(i)),
            (0, s(i)),
            (s(i), h(i)),
            (s(i), h(j)),
            (s(i), t(i)),
        ]);
        edges.extend([(a(i), h(i)), (a(i), t(i)), (b(j), h(j)), (b(j), t(i))]);
    }
    Configuration::from_edges("rosette-31", sides, &edges).unwrap()
}

fn star(name: &str, center: u32, petals: usize, petal: u32) -> Configuration {
    let mut sides = vec![center];
    sides.extend(vec![petal; petals]);
    let edges: Vec<_> = (1..=petals).map(|i| (0, i)).collect();
    Configuration::from_edges(name, sides, &edges).unwrap()
}

fn path(name: &str, sides: Vec<u32>) -> Configuration {
    let edges: Vec<_> = (1..sides.len()).map(|i| (i - 1, i)).collect();
    Configuration::from_edges(name, sides, &edges).unwrap()
}

fn four_squares(name: &str) -> Configuration {
    Configuration::from_edges(name, vec![4; 4], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

fn listed(name: &str, sides: Vec<u32>, adj: &[&[usize]]) -> Configuration {
    Configuration::new(name, sides, adj.iter().map(|a| a.to_vec()).collect()).unwrap()
}

fn sides_with(n: usize, default: u32, special: &[usize], s: u32) -> Vec<u32> {
    (0..n)
        .map(|i| if special.contains(&i) { s } else { default })
        .collect()
}

pub fn catalog_entries() -> BTreeMap<String, CatalogEntry> {
    use Family::*;
    let lattice = |family| Home::Lattice { family };
    let mut out = BTreeMap::new();
    let mut add = |config: Configuration, k: u32, home: Home| {
        out.insert(config.name.clone(), CatalogEntry { config, k, home });
    };

    add(
        Configuration::new("(3.12.12)-fig0", vec![3], vec![vec![]]).unwrap(),
        3,
        lattice(TruncatedHex),
    );
    add(star("(4.6.12)-fig0", 6, 3, 4), 3, lattice(TruncatedTrihex));
    add(grid_488(), 3, lattice(TruncatedSquare));
    add(
        listed(
            "(3.6.3.6)-fig0",
            sides_with(12, 3, &[0, 2, 4, 7], 6),
            &[
                &[1, 3, 6, 10],
                &[0, 2, 4],
                &[1, 3, 5, 8],
                &[0, 2],
                &[1, 5, 6, 9],
                &[2, 4, 7],
                &[0, 4],
                &[5, 8, 9, 11],
                &[2, 7],
                &[4, 7],
                &[0],
                &[7],
            ],
        ),
        2,
        lattice(Kagome),
    );
    add(rosette_3464(), 1, lattice(Rhombitrihex));
    add(
        listed(
            "(3.3.3.3.6)-fig0",
            sides_with(19, 3, &[7], 6),
            &[
                &[1, 13],
                &[0, 2, 7],
                &[1, 12],
                &[4, 7, 13],
                &[3, 5],
                &[4, 6],
                &[5, 7, 18],
                &[1, 3, 6, 10, 11, 15],
                &[9, 10],
                &[8, 11],
                &[7, 8, 16],
                &[7, 9, 17],
                &[2, 15],
                &[0, 3],
                &[15, 16],
                &[7, 12, 14],
                &[10, 14],
                &[11, 18],
                &[6, 17],
            ],
        ),
        1,
        lattice(SnubHex),
    );
    add(
        listed(
            "(3.3.4.3.4)-fig0",
            sides_with(12, 3, &[1, 2, 5, 11], 4),
            &[
                &[1, 2],
                &[0, 4, 10],
                &[0, 3, 9],
                &[2, 4, 11],
                &[1, 3, 5],
                &[4, 6, 7],
                &[5, 10],
                &[5, 11],
                &[9, 11],
                &[2, 8],
                &[1, 6],
                &[3, 7, 8],
            ],
        ),
        1,
        lattice(SnubSquare),
    );
    add(
        listed(
            "(3.3.3.4.4)-fig0",
            sides_with(13, 3, &[3, 5, 11], 4),
            &[
                &[1, 11],
                &[0, 10],
                &[3, 9],
                &[2, 4, 5],
                &[3, 7],
                &[3, 6, 10, 11],
                &[5, 7, 8],
                &[4, 6],
                &[6, 12],
                &[2, 10],
                &[1, 5, 9],
                &[0, 5, 12],
                &[8, 11],
            ],
        ),
        1,
        lattice(ElongatedTri),
    );

    add(witness_31(), 2, Home::MergedRosettes);
    add(
        path("tri-square-tri", vec![3, 4, 3]),
        2,
        Home::strips("hex:0,square:1/2"),
    );
    add(
        four_squares("square-block"),
        2,
        Home::strips("hex:0,square:1/2,square:1/2"),
    );
    add(
        path("tri-square-square-tri", vec![3, 4, 4, 3]),
        2,
        Home::strips("hex:0,square:1/2,square:1/2"),
    );

    add(path("strips-a", vec![3, 3]), 2, Home::strips("hex:0"));
    add(star("strips-b", 6, 6, 3), 2, Home::strips("hex:0,hex:1"));
    add(four_squares("strips-c"), 2, Home::strips("square:0"));
    add(
        path("strips-d", vec![3, 4, 3]),
        2,
        Home::strips("hex:0,square:1/2"),
    );
    add(
        path("strips-e", vec![3, 4, 4, 3]),
        2,
        Home::strips("hex:0,square:1/2,square:1/2"),
    );
    out
}

/// Name to configuration, for every catalog entry.
pub fn catalog_configurations() -> BTreeMap<String, Configuration> {
    catalog_entries()
        .into_iter()
        .map(|(k, e)| (k, e.config))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogAudit {
    pub name: String,
    pub k: u32,
    pub faces: usize,
    pub home: String,
    /// First copy found in the home torus, if any.
    pub copy: Option<Vec<usize>>,
    pub max_external: Option<u32>,
    pub blocks_at_k: bool,
    pub blocks_below_k: bool,
}

impl CatalogAudit {
    /// Present, blocking at `k`, and tight.
    pub fn passed(&self) -> bool {
        self.copy.is_some() && self.blocks_at_k && !self.blocks_below_k
    }
}

/// Locates `entry` in its home torus and checks blocking at `k` and `k - 1`.
pub fn audit_entry(name: &str, entry: &CatalogEntry) -> Result<CatalogAudit> {
    let home = entry.home.torus()?;
    let copy = find_copies(&home, &entry.config, 1).into_iter().next();
    let report = copy
        .as_ref()
        .map(|c| verify_blocking(&home, c, entry.k))
        .transpose()?;
    Ok(CatalogAudit {
        name: name.to_string(),
        k: entry.k,
        faces: entry.config.len(),
        home: home.spec.to_string(),
        max_external: report.map(|r| r.max_external),
        blocks_at_k: report.is_some_and(|r| r.ok),
        blocks_below_k: report.is_some_and(|r| r.max_external < entry.k),
        copy,
    })
}
