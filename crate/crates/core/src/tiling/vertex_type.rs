//! Vertex types: the cyclic sequence of polygon sizes meeting at a vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest polygon that can occur at a vertex of a tiling by regular polygons
/// (the 42-gon of 3.7.42).
const MAX_SIZE: u32 = 42;

/// A vertex type kept in canonical form: the lexicographically smallest
/// sequence over every rotation and the reflection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexType(Vec<u32>);

/// Lexicographic minimum over the dihedral orbit of `raw`.
pub fn canonical_form(raw: &[u32]) -> Vec<u32> {
    let n = raw.len();
    let mut best: Option<Vec<u32>> = None;
    let reversed: Vec<u32> = raw.iter().rev().copied().collect();
    for seq in [raw, reversed.as_slice()] {
        for r in 0..n {
            let rot: Vec<u32> = seq[r..].iter().chain(&seq[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Σ 1/n_i = |sizes|/2 − 1, i.e. the interior angles sum to 360°.
pub fn satisfies_angle_equation(sizes: &[u32]) -> bool {
    if sizes.iter().any(|&s| s < 3) {
        return false;
    }
    let sum: Ratio<i64> = sizes.iter().map(|&s| Ratio::new(1, s as i64)).sum();
    sum == Ratio::new(sizes.len() as i64, 2) - 1
}

impl VertexType {
    /// Canonicalize and check the angle equation.
    pub fn new(raw: &[u32]) -> Result<Self> {
        let t = Self::canonicalize(raw)?;
        if !satisfies_angle_equation(&t.0) {
            return Err(Error::InvalidVertexType(
                raw.to_vec(),
                "angles do not sum to 360",
            ));
        }
        Ok(t)
    }

    /// Canonicalize without the angle check. Entries must be at least 3.
    pub fn canonicalize(raw: &[u32]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidVertexType(raw.to_vec(), "empty sequence"));
        }
        if raw.iter().any(|&s| s < 3) {
            return Err(Error::InvalidVertexType(
                raw.to_vec(),
                "entries must be >= 3",
            ));
        }
        Ok(VertexType(canonical_form(raw)))
    }

    pub fn sizes(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, size: u32) -> bool {
        self.0.contains(&size)
    }

    /// Ordered pairs of cyclically consecutive entries, in both directions.
    pub fn consecutive_pairs(&self) -> BTreeSet<(u32, u32)> {
        let n = self.0.len();
        let mut out = BTreeSet::new();
        for i in 0..n {
            let (a, b) = (self.0[i], self.0[(i + 1) % n]);
            out.insert((a, b));
            out.insert((b, a));
        }
        out
    }

    /// Unordered neighbor pairs `{x, y}` such that `x, size, y` occur
    /// consecutively somewhere in this type.
    fn flanks_of(&self, size: u32) -> Vec<(u32, u32)> {
        let n = self.0.len();
        (0..n)
            .filter(|&i| self.0[i] == size)
            .map(|i| {
                let x = self.0[(i + n - 1) % n];
                let y = self.0[(i + 1) % n];
                (x.min(y), x.max(y))
            })
            .collect()
    }

    pub fn is_catalog(&self) -> bool {
        catalog().contains(self)
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for VertexType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let sizes = trimmed
            .split('.')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidVertexType(vec![], "unparseable vertex type"))?;
        VertexType::new(&sizes)
    }
}

impl TryFrom<String> for VertexType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<VertexType> for String {
    fn from(t: VertexType) -> String {
        t.to_string()
    }
}

/// All solutions of the angle equation with 3 to 6 faces, one per dihedral
/// class.
pub fn enumerate_vertex_types() -> BTreeSet<VertexType> {
    let mut out = BTreeSet::new();
    for len in 3..=6 {
        let mut multiset = Vec::with_capacity(len);
        enumerate_multisets(len, 3, &mut multiset, &mut |m| {
            if satisfies_angle_equation(m) {
                for arrangement in permutations(m) {
                    out.insert(VertexType(canonical_form(&arrangement)));
                }
            }
        });
    }
    out
}

fn enumerate_multisets(len: usize, min: u32, acc: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if acc.len() == len {
        visit(acc);
        return;
    }
    for s in min..=MAX_SIZE {
        // Remaining entries are each >= s, so the reciprocal sum can only shrink.
        let have: Ratio<i64> = acc.iter().map(|&x| Ratio::new(1, x as i64)).sum();
        let target = Ratio::new(len as i64, 2) - 1;
        let remaining = (len - acc.len()) as i64;
        if have + Ratio::new(remaining, s as i64) < target {
            break;
        }
        acc.push(s);
        enumerate_multisets(len, s, acc, visit);
        acc.pop();
    }
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for i in 0..items.len() {
        if !seen.insert(items[i]) {
            continue;
        }
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// The 21-type catalog, cached.
pub fn catalog() -> &'static BTreeSet<VertexType> {
    static CATALOG: std::sync::OnceLock<BTreeSet<VertexType>> = std::sync::OnceLock::new();
    CATALOG.get_or_init(enumerate_vertex_types)
}

/// Types that cannot occur in any tiling because an odd polygon would have
/// to alternate between two neighbor sizes.
///
/// For each odd size `n` in the type, build the graph on neighbor sizes with
/// an edge `{x, y}` whenever some catalog type contains `x, n, y`
/// consecutively. The faces around an `n`-gon form a closed walk of length
/// `n` in that graph, so if the component holding this type's flanks is
/// bipartite the type is infeasible.
pub fn is_parity_infeasible(t: &VertexType) -> bool {
    for &n in t.sizes().iter().collect::<BTreeSet<_>>() {
        if n % 2 == 0 {
            continue;
        }
        let mut edges: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
        for other in catalog() {
            for (x, y) in other.flanks_of(n) {
                edges.entry(x).or_default().insert(y);
                edges.entry(y).or_default().insert(x);
            }
        }
        for (x, _) in t.flanks_of(n) {
            if component_is_bipartite(&edges, x) {
                return true;
            }
        }
    }
    false
}

fn component_is_bipartite(edges: &BTreeMap<u32, BTreeSet<u32>>, start: u32) -> bool {
    let mut color: BTreeMap<u32, bool> = BTreeMap::new();
    let mut stack = vec![(start, false)];
    while let Some((v, c)) = stack.pop() {
        if let Some(&existing) = color.get(&v) {
            if existing != c {
                return false;
            }
            continue;
        }
        color.insert(v, c);
        for &w in edges.get(&v).into_iter().flatten() {
            stack.push((w, !c));
        }
    }
    true
}

/// True iff no two distinct members share a pair of cyclically consecutive
/// entries.
pub fn check_no_successive_agreement(types: &BTreeSet<VertexType>) -> bool {
    let list: Vec<&VertexType> = types.iter().collect();
    for (i, a) in list.iter().enumerate() {
        let pa = a.consecutive_pairs();
        for b in &list[i + 1..] {
            if !pa.is_disjoint(&b.consecutive_pairs()) {
                return false;
            }
        }
    }
    true
}

/// The five types that occur only in their own Archimedean lattice.
pub const RIGID_TYPES: [&str; 5] = ["3.6.3.6", "3.12.12", "4.6.12", "4.8.8", "6.6.6"];

/// The six types ruled out by the parity argument.
pub const INFEASIBLE_TYPES: [&str; 6] =
    ["3.7.42", "3.8.24", "3.9.18", "3.10.15", "4.5.20", "5.5.10"];
