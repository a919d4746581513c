use std::collections::BTreeSet;

use percolattice::engine::{run_bootstrap, seed_explicit};
use percolattice::tiling::{
    build, build_archimedean, build_strip_tiling, inflate_3_12_12, substitute_hexagons, Extent,
    Family, StripDesc, StripSequence, TilingPatch, Topology,
};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    proptest::sample::select(Family::ALL.to_vec())
}

fn strip_sequence() -> impl Strategy<Value = StripSequence> {
    // Offsets in halves, so both edge-to-edge and shifted stackings appear.
    proptest::collection::vec((any::<bool>(), 0i64..4), 1..4).prop_map(|v| {
        let strips = v
            .into_iter()
            .map(|(hex, half)| {
                let q = num_rational::Ratio::new(half, 2);
                if hex {
                    StripDesc::hex(q)
                } else {
                    StripDesc::square(q)
                }
            })
            .collect();
        StripSequence::new(strips).unwrap()
    })
}

fn torus(f: Family, n: u32) -> TilingPatch {
    build_archimedean(
        f,
        Extent::Cells {
            width: n,
            height: n,
        },
        Topology::Torus,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn local_signature_ignores_torus_size(f in family(), a in 4u32..7, b in 4u32..7) {
        prop_assert_eq!(torus(f, a).signature_set(), torus(f, b).signature_set());
        let census = torus(f, a).vertex_census();
        prop_assert_eq!(census.len(), 1);
        prop_assert_eq!(census.keys().next().unwrap(), &f.vertex_type());
    }

    #[test]
    fn truncated_square_window_counts(t in 0u32..8) {
        let p = build_archimedean(Family::TruncatedSquare, Extent::Radius { t }, Topology::Open).unwrap();
        let n = 2 * t as usize + 1;
        prop_assert_eq!(p.faces_with_sides(8).len(), n * n);
        prop_assert_eq!(p.faces_with_sides(4).len(), (n - 1) * (n - 1));
    }

    #[test]
    fn patch_json_round_trips(f in family(), n in 3u32..5, open in any::<bool>()) {
        let topo = if open { Topology::Open } else { Topology::Torus };
        let p = build_archimedean(f, Extent::Cells { width: n.max(4), height: n.max(4) }, topo).unwrap();
        let back = TilingPatch::from_json(&p.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn strip_torus_is_consistent(seq in strip_sequence()) {
        let rows = 2 * seq.len() as u32 * 2;
        let p = build_strip_tiling(&seq, rows, 12, Topology::Torus).unwrap();
        p.validate().unwrap();
        prop_assert!(p.is_connected());
        let back = TilingPatch::from_json(&p.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn substitution_keeps_connectivity(n in 4u32..8, picks in proptest::collection::vec(any::<usize>(), 1..4), start in any::<usize>()) {
        let base = torus(Family::Hex, n);
        let mut targets = BTreeSet::new();
        for i in picks {
            let h = i % base.len();
            if base.neighbors(h).iter().all(|g| !targets.contains(g)) {
                targets.insert(h);
            }
        }
        let m = substitute_hexagons(&base, &targets).unwrap();
        prop_assert_eq!(m.len(), base.len() + 5 * targets.len());
        // k = 1 spreads over any connected patch.
        let s = start % m.len();
        let (state, out) = run_bootstrap(&m, seed_explicit(&m, &[s]).unwrap(), 1).unwrap();
        prop_assert!(out.percolated, "{:?}", state.count());
        let census = m.vertex_census();
        let count = |t: &str| census.get(&t.parse().unwrap()).copied().unwrap_or(0);
        prop_assert_eq!(count("3.3.3.3.3.3"), targets.len());
        prop_assert_eq!(count("3.3.6.6"), 6 * targets.len());
    }

    #[test]
    fn inflation_preserves_adjacency(w in 3u32..7, h in 3u32..7) {
        let p = build(&Family::TruncatedHex.into(), Extent::Cells { width: w, height: h }, Topology::Torus).unwrap();
        let (q, image) = inflate_3_12_12(&p).unwrap();
        prop_assert_eq!(q.len(), p.faces_with_sides(12).len());
        for a in 0..q.len() {
            for b in 0..q.len() {
                prop_assert_eq!(q.are_adjacent(a, b), p.are_adjacent(image[a], image[b]));
            }
        }
    }
}
