//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{faces_of, random_mask, random_small_patch, sequential_closure};
use num_bigint::BigInt;
use num_rational::BigRational;
use percolattice::analysis::{
    audit_entry, catalog_entries, certify_growth, classify_vertex_type,
    inflation_consistency_check, minimal_t, modified_hex_experiment, monte_carlo_estimate,
    row_growth_replay, success_lower_bound, tail_bound, BoundFamily, TypeClass,
};
use percolattice::engine::{naive_closure, run_bootstrap, seed_explicit};
use percolattice::tiling::vertex_type::RIGID_TYPES;
use percolattice::tiling::{
    build_archimedean, check_no_successive_agreement, enumerate_vertex_types, inflate_3_12_12,
    torus_side_for, Extent, Family, LatticeSpec, StripSequence, Topology, VertexType,
};

/// Criteria whose stated target cannot be met; see `modified_hex`.
const KNOWN_UNATTAINABLE: &[u32] = &[10];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn vt(s: &str) -> VertexType {
    s.parse().unwrap()
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn vertex_types() -> Outcome {
    let listed = "3.3.3.3.3.3, 3.3.3.3.6, 3.3.3.4.4, 3.3.4.3.4, 3.3.6.6, 3.6.3.6, 3.3.4.12, 3.4.3.12, 3.4.4.6, 3.4.6.4, 4.4.4.4, \
                  3.7.42, 3.8.24, 3.9.18, 3.10.15, 3.12.12, 4.5.20, 4.6.12, 4.8.8, 5.5.10, 6.6.6";
    let expected: BTreeSet<VertexType> = listed.split(", ").map(vt).collect();
    let got = enumerate_vertex_types();
    outcome(
        got == expected && got.len() == 21,
        format!("{} types", got.len()),
    )
}

fn classification() -> Outcome {
    let infeasible: BTreeSet<VertexType> =
        ["3.7.42", "3.8.24", "3.9.18", "3.10.15", "4.5.20", "5.5.10"]
            .map(vt)
            .into();
    let reported: BTreeSet<VertexType> = enumerate_vertex_types()
        .into_iter()
        .filter(|t| classify_vertex_type(t).unwrap() == TypeClass::Infeasible)
        .collect();
    let rigid: BTreeSet<VertexType> = RIGID_TYPES.iter().map(|s| vt(s)).collect();
    let rigid_ok = rigid.iter().all(|t| {
        matches!(
            classify_vertex_type(t).unwrap(),
            TypeClass::RigidLatticeType { .. }
        )
    });
    let pass = reported == infeasible && rigid_ok && check_no_successive_agreement(&rigid);
    outcome(
        pass,
        format!(
            "{} infeasible, rigid agreement-free: {}",
            reported.len(),
            check_no_successive_agreement(&rigid)
        ),
    )
}

fn blocking_catalog() -> Outcome {
    let audits: Vec<_> = catalog_entries()
        .iter()
        .map(|(n, e)| audit_entry(n, e).unwrap())
        .collect();
    let failed: Vec<&str> = audits
        .iter()
        .filter(|a| !a.passed())
        .map(|a| a.name.as_str())
        .collect();
    let rosette = audits.iter().find(|a| a.name == "rosette-31").unwrap();
    let rosette_ok =
        rosette.faces == 31 && rosette.k == 2 && rosette.blocks_at_k && !rosette.blocks_below_k;
    outcome(
        failed.is_empty() && rosette_ok,
        format!("{} configurations, failed: {failed:?}", audits.len()),
    )
}

fn certificates() -> Outcome {
    let mut runs: Vec<(LatticeSpec, u32, std::ops::RangeInclusive<u32>)> = vec![
        (Family::TruncatedSquare.into(), 3, 1..=4),
        (Family::Hex.into(), 3, 1..=3),
        (Family::Kagome.into(), 2, 1..=3),
        (Family::TruncatedTrihex.into(), 3, 1..=3),
    ];
    for seq in ["hex:0", "hex:0,square:1/2", "hex:0,square:1/2,hex:1,hex:0,hex:1,square:1/2,square:1/2,hex:0,hex:0,hex:1,square:1/2,hex:0,hex:0"] {
        runs.push((LatticeSpec::Strips { sequence: seq.parse::<StripSequence>().unwrap() }, 2, 1..=3));
    }
    let mut bad = Vec::new();
    let mut count = 0;
    for (spec, k, ts) in runs {
        for t in ts {
            count += 1;
            if !certify_growth(&spec, k, t).unwrap().passed() {
                bad.push(format!("{spec} k={k} t={t}"));
            }
            if certify_growth(&spec, k + 1, t).unwrap().passed() {
                bad.push(format!("{spec} k={} t={t} passed", k + 1));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} certificates, each also failing at k+1; problems: {bad:?}"),
    )
}

fn threshold_table() -> Outcome {
    const TRIALS: u64 = 400;
    const SEED: u64 = 20_240_601;
    let mut bad = Vec::new();
    let mut worst = (1.0f64, 0.0f64);
    for family in Family::ALL {
        let side = torus_side_for(family, 10_000);
        let patch = build_archimedean(
            family,
            Extent::Cells {
                width: side,
                height: side,
            },
            Topology::Torus,
        )
        .unwrap();
        assert!(patch.len() >= 10_000);
        let k = family.threshold();
        let at = monte_carlo_estimate(&patch, 0.5, k, TRIALS, SEED)
            .unwrap()
            .frequency;
        let above = monte_carlo_estimate(&patch, 0.1, k + 1, TRIALS, SEED)
            .unwrap()
            .frequency;
        worst = (worst.0.min(at), worst.1.max(above));
        if at < 0.9 || above > 0.1 {
            bad.push(format!("{family}: k={k} f={at} / k={} f={above}", k + 1));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "min at threshold {:.3}, max above {:.3}; {bad:?}",
            worst.0, worst.1
        ),
    )
}

fn bounds() -> Outcome {
    let half = rational(1, 2);
    let a = tail_bound(BoundFamily::TruncatedSquare, &half, 2).unwrap() == rational(1, 6);
    let b = tail_bound(BoundFamily::Strips, &half, 4).unwrap() == rational(3, 4);
    let seq = StripSequence::mixed_example();
    let c = (1..=9).all(|i| {
        let p = rational(i, 10);
        [BoundFamily::TruncatedSquare, BoundFamily::Strips]
            .into_iter()
            .all(|f| {
                let t = minimal_t(f, &p).unwrap();
                success_lower_bound(f, &p, t, &seq).unwrap() > rational(0, 1)
            })
    });
    outcome(
        a && b && c,
        format!("1/6: {a}, 3/4: {b}, positive on grid: {c}"),
    )
}

fn replay() -> Outcome {
    let mut bad = Vec::new();
    let mut check = |family: Family,
                     at: [f64; 2],
                     scale: [f64; 2],
                     labels: &[(f64, f64, u32)],
                     round: &dyn Fn(u32) -> u32| {
        let r = row_growth_replay(family, 6).unwrap();
        for &(x, y, label) in labels {
            let face = r.face_at([(x - at[0]) * scale[0], (y - at[1]) * scale[1]], 0.35);
            let got = face.and_then(|f| r.rounds[f]);
            if got != Some(round(label)) {
                bad.push(format!("{family} label {label} at ({x},{y}): {got:?}"));
            }
        }
    };
    let kagome = [
        (12.0, 9.0, 1),
        (8.0, 9.0, 3),
        (16.0, 9.0, 3),
        (10.0, 9.65, 4),
        (14.0, 9.65, 4),
        (6.0, 8.35, 4),
        (10.0, 8.35, 2),
        (14.0, 8.35, 2),
        (18.0, 8.35, 4),
    ];
    check(
        Family::Kagome,
        [12.0, 9.0],
        [0.5, 3f64.sqrt() / 2.0],
        &kagome,
        &|l| l - 1,
    );
    let s = (3.0 + 3f64.sqrt()) / 2.64;
    let mut trihex = vec![(6.61, 6.75, 5), (9.25, 6.75, 1), (11.89, 6.75, 5)];
    trihex.extend([6.61, 9.25, 11.89].map(|x| (x, 5.25, 0)));
    trihex.extend(
        [
            (5.94, 6),
            (7.26, 4),
            (8.58, 2),
            (9.90, 2),
            (11.22, 4),
            (12.54, 6),
        ]
        .map(|(x, l)| (x, 5.625, l)),
    );
    trihex.extend([
        (7.92, 6.75, 6),
        (10.56, 6.75, 6),
        (7.92, 6.0, 3),
        (10.56, 6.0, 3),
    ]);
    check(
        Family::TruncatedTrihex,
        [9.25, 6.75],
        [s, s],
        &trihex,
        &|l| match l {
            1 => 0,
            0 => 1,
            l => l,
        },
    );
    outcome(
        bad.is_empty(),
        format!("{} labels checked; mismatches: {bad:?}", 9 + trihex.len()),
    )
}

fn inflation() -> Outcome {
    let side = torus_side_for(Family::TruncatedHex, 1000);
    let patch = build_archimedean(
        Family::TruncatedHex,
        Extent::Cells {
            width: side,
            height: side,
        },
        Topology::Torus,
    )
    .unwrap();
    let n = patch.faces_with_sides(12).len();
    let (hex, image) = inflate_3_12_12(&patch).unwrap();
    let signatures = hex.len() == n
        && hex
            .faces
            .iter()
            .all(|f| f.sides == 6 && f.neighbors.len() == 6)
        && hex.vertex_census().keys().eq([vt("6.6.6")].iter());
    let adjacency = (0..n)
        .all(|a| (0..n).all(|b| hex.are_adjacent(a, b) == patch.are_adjacent(image[a], image[b])));
    let r = inflation_consistency_check(&patch, 0.5, 3, 200, 8).unwrap();
    let pass = signatures && adjacency && r.consistent() && r.trials == 200;
    outcome(
        pass,
        format!(
            "n={n} of {} faces; hex percolated {}/200, original {}/200",
            patch.len(),
            r.hex_percolated,
            r.original_percolated
        ),
    )
}

fn engine_suite() -> Outcome {
    let mut bad = 0;
    for i in 0..200u64 {
        let patch = random_small_patch(1_000 + i, 30);
        let p = 0.1 + 0.4 * (i % 5) as f64 / 4.0;
        let mask = random_mask(patch.len(), p, i);
        let extra = random_mask(patch.len(), p, i + 7_777);
        let big: Vec<bool> = mask.iter().zip(&extra).map(|(a, b)| *a || *b).collect();
        for k in 1..=4 {
            let (state, _) =
                run_bootstrap(&patch, seed_explicit(&patch, &faces_of(&mask)).unwrap(), k).unwrap();
            let closed = &state.infected;
            let oracle = naive_closure(&patch, &mask, k) == *closed;
            let schedule = sequential_closure(&patch, &mask, k, i) == *closed;
            let sound = (0..patch.len()).all(|f| {
                closed[f] || (patch.neighbors(f).iter().filter(|&&g| closed[g]).count() as u32) < k
            });
            let larger = naive_closure(&patch, &big, k);
            let weaker = naive_closure(&patch, &mask, k + 1);
            let mono =
                (0..patch.len()).all(|f| (!closed[f] || larger[f]) && (!weaker[f] || closed[f]));
            if !(oracle && schedule && sound && mono) {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0,
        format!("200 patches x 4 thresholds, {bad} violations"),
    )
}

/// With one substituted hexagon the six new triangles each have one
/// neighbor outside their ring, so at k = 2 they stay healthy exactly when
/// none starts infected. Percolation then has probability about
/// `1 - (1-p)^6`, which is 0.984 at p = 0.5: outside (0.05, 0.95), like
/// the control. The criterion's p cannot be met; the local count is checked
/// instead and the band is reached at smaller p.
fn modified_hex() -> (Outcome, bool) {
    let extents = [
        Extent::Cells {
            width: 20,
            height: 20,
        },
        Extent::Cells {
            width: 40,
            height: 40,
        },
    ];
    let mut inside = 0;
    let mut control_outside = 0;
    let mut oracle_ok = true;
    let mut notes = Vec::new();
    for e in extents {
        let r = modified_hex_experiment(e, 1, 2, &[0.1, 0.5], 400, 31).unwrap();
        for row in &r.rows {
            oracle_ok &= row.modified.ci_low - 0.02 <= row.local_prediction
                && row.local_prediction <= row.modified.ci_high + 0.02;
            if row.p == 0.5 {
                let f = row.modified.frequency;
                inside += (f > 0.05 && f < 0.95) as u32;
                control_outside +=
                    !(row.control.frequency > 0.05 && row.control.frequency < 0.95) as u32;
                notes.push(format!(
                    "{e}: p=0.5 f={f:.3} control={:.3}",
                    row.control.frequency
                ));
            } else {
                notes.push(format!(
                    "{e}: p={} f={:.3} predicted {:.3}",
                    row.p, row.modified.frequency, row.local_prediction
                ));
            }
        }
    }
    (
        outcome(inside == 2 && control_outside == 2, notes.join("; ")),
        oracle_ok,
    )
}

fn main() {
    let limits = [1, 1, 5, 30, 600, 1, 1, 30, 30, 120].map(Duration::from_secs);
    let mut results: Vec<(u32, &str, Outcome, Duration)> = Vec::new();
    let mut run = |n: u32, name: &'static str, f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let o = f();
        results.push((n, name, o, start.elapsed()));
    };
    run(1, "vertex-type enumeration", &vertex_types);
    run(2, "type classification", &classification);
    run(3, "blocking catalog", &blocking_catalog);
    run(4, "growth certificates", &certificates);
    run(5, "threshold table", &threshold_table);
    run(6, "closed-form bounds", &bounds);
    run(7, "row-growth replay", &replay);
    run(8, "inflation", &inflation);
    run(9, "engine properties", &engine_suite);
    let start = Instant::now();
    let (ten, local_count_ok) = modified_hex();
    results.push((10, "modified hex", ten, start.elapsed()));

    let mut unexpected = Vec::new();
    for (n, name, o, took) in &results {
        let in_time = *took <= limits[*n as usize - 1];
        let pass = o.pass && in_time;
        println!(
            "{} criterion {n:>2} {name}: {} [{:.2}s, limit {}s]",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            took.as_secs_f64(),
            limits[*n as usize - 1].as_secs()
        );
        if pass == KNOWN_UNATTAINABLE.contains(n) {
            unexpected.push(*n);
        }
    }
    assert!(
        local_count_ok,
        "modified hex frequencies disagree with 1 - (1-p)^6"
    );
    assert!(
        unexpected.is_empty(),
        "criteria with unexpected outcome: {unexpected:?}"
    );
}
