//! Chaining certificates: one seeded face per side on every ring, starting
//! from a full inner core, fills the whole window.

use std::collections::BTreeSet;

use percolattice::analysis::certify_growth;
use percolattice::engine::{run_bootstrap, seed_explicit};
use percolattice::tiling::{ring_decomposition, Family, LatticeSpec, StripSequence};

fn key(c: [f64; 2]) -> (i64, i64) {
    ((c[0] * 1e4).round() as i64, (c[1] * 1e4).round() as i64)
}

/// Seeds `core(t0)` plus the first seedable face of each side of rings
/// `t0..top`, restricted to `core(top)`, and checks everything fills.
fn chain(spec: &LatticeSpec, k: u32, t0: u32, top: u32) {
    for t in t0..top {
        assert!(certify_growth(spec, k, t).unwrap().passed(), "{spec} t={t}");
    }
    let outer = ring_decomposition(spec, top).unwrap();
    let at: std::collections::HashMap<_, _> = (0..outer.patch.len())
        .map(|f| (key(outer.patch.faces[f].center), f))
        .collect();
    let window: BTreeSet<usize> = outer.core.iter().copied().collect();
    let (patch, index) = outer.patch.induced(&window);

    let mut seeds = BTreeSet::new();
    let inner = ring_decomposition(spec, t0).unwrap();
    let lift = |ring: &percolattice::tiling::RingSpec, f: usize| {
        index[&at[&key(ring.patch.faces[f].center)]]
    };
    seeds.extend(inner.core.iter().map(|&f| lift(&inner, f)));
    for t in t0..top {
        let ring = ring_decomposition(spec, t).unwrap();
        seeds.extend(
            ring.sides()
                .filter_map(|s| s.seedable.first())
                .map(|&f| lift(&ring, f)),
        );
    }
    let seeds: Vec<usize> = seeds.into_iter().collect();
    let (state, out) = run_bootstrap(&patch, seed_explicit(&patch, &seeds).unwrap(), k).unwrap();
    assert!(
        out.percolated,
        "{spec}: {} of {} infected from {} seeds",
        state.count(),
        patch.len(),
        seeds.len()
    );
}

#[test]
fn archimedean_rings_chain() {
    for (family, top) in [
        (Family::TruncatedSquare, 4),
        (Family::Hex, 3),
        (Family::Kagome, 3),
        (Family::TruncatedTrihex, 3),
    ] {
        chain(&family.into(), family.threshold(), 1, top);
    }
}

#[test]
fn strip_rings_chain() {
    for seq in ["hex:0", "hex:0,square:1/2", "hex:0,hex:1"] {
        let spec = LatticeSpec::Strips {
            sequence: seq.parse::<StripSequence>().unwrap(),
        };
        chain(&spec, 2, 1, 3);
    }
}
