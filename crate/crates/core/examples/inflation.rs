//! (3.12.12) to (6.6.6): adjacency audit and coupled trials.

use percolattice::analysis::inflation_consistency_check;
use percolattice::tiling::{build_archimedean, inflate_3_12_12, Extent, Family, Topology};

fn main() -> percolattice::Result<()> {
    let base = build_archimedean(
        Family::TruncatedHex,
        Extent::Cells {
            width: 12,
            height: 12,
        },
        Topology::Torus,
    )?;
    let (hex, image) = inflate_3_12_12(&base)?;
    let preserved = (0..hex.len()).all(|a| {
        (0..hex.len()).all(|b| hex.are_adjacent(a, b) == base.are_adjacent(image[a], image[b]))
    });
    println!(
        "{} faces, {} 12-gons -> {} hexagons, adjacency preserved: {preserved}",
        base.len(),
        image.len(),
        hex.len()
    );
    for p in [0.3, 0.5, 0.7] {
        let r = inflation_consistency_check(&base, p, 3, 200, 1)?;
        println!(
            "p={p}: hex image percolates {}/200, original {}/200, violations {}",
            r.hex_percolated, r.original_percolated, r.violations
        );
    }
    Ok(())
}
