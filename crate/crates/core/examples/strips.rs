//! Strip tilings: build, census and a k = 2 run.

use percolattice::engine::run_trial;
use percolattice::tiling::{build_strip_tiling, StripSequence, Topology};

fn main() -> percolattice::Result<()> {
    for text in [
        "hex:0",
        "square:0",
        "hex:0,hex:1/2,square:0",
        "hex:0,square:1/2,square:1/2",
    ] {
        let seq: StripSequence = text.parse()?;
        let rows = 4 * seq.len() as u32;
        let p = build_strip_tiling(&seq, rows, 24, Topology::Torus)?;
        let census: Vec<String> = p
            .vertex_census()
            .iter()
            .map(|(t, n)| format!("{t} x{n}"))
            .collect();
        let hits = (0..50)
            .filter(|&s| {
                run_trial(&p, 0.2, 2, s)
                    .map(|o| o.percolated)
                    .unwrap_or(false)
            })
            .count();
        println!(
            "{text}: {} faces, edge-to-edge {}, {}; k=2 at p=0.2 percolates {hits}/50",
            p.len(),
            p.edge_to_edge,
            census.join(" ")
        );
    }
    Ok(())
}
