//! Empirical thresholds at p = 1/2 for every Archimedean lattice.
//!
//! At p = 1/2 a few thousand faces are not enough for (3.4.6.4): k = 2
//! still fills the torus and the trend flag says so.

use percolattice::analysis::estimate_threshold;
use percolattice::tiling::{torus_side_for, Extent, Family};

fn main() -> percolattice::Result<()> {
    println!(
        "{:<14} {:>6} {:>6} {:>12}",
        "lattice", "k_hat", "known", "flags"
    );
    for f in Family::ALL {
        let extents: Vec<Extent> = [4000, 16000]
            .iter()
            .map(|&n| {
                let s = torus_side_for(f, n);
                Extent::Cells {
                    width: s,
                    height: s,
                }
            })
            .collect();
        let t = estimate_threshold(&f.into(), 0.5, &extents, 60, 7)?;
        let flags = if t.inconclusive {
            "inconclusive"
        } else if !t.trend_away_from_half {
            "trend?"
        } else {
            ""
        };
        println!(
            "{:<14} {:>6} {:>6} {:>12}",
            format!("({f})"),
            t.k_hat,
            f.threshold(),
            flags
        );
    }
    Ok(())
}
