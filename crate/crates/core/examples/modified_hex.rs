//! Splitting hexagons into triangles makes k = 2 percolation depend on p.

use percolattice::analysis::modified_hex_experiment;
use percolattice::tiling::Extent;

fn main() -> percolattice::Result<()> {
    let grid = [0.05, 0.1, 0.2, 0.3, 0.5];
    for subs in [1, 4] {
        for side in [20, 40] {
            let r = modified_hex_experiment(
                Extent::Cells {
                    width: side,
                    height: side,
                },
                subs,
                2,
                &grid,
                400,
                3,
            )?;
            println!("{subs} substitution(s), {side}x{side}:");
            for row in &r.rows {
                println!(
                    "  p={:<5} modified {:.3} [{:.3}, {:.3}]  control {:.3}  local count {:.3}",
                    row.p,
                    row.modified.frequency,
                    row.modified.ci_low,
                    row.modified.ci_high,
                    row.control.frequency,
                    row.local_prediction
                );
            }
        }
    }
    Ok(())
}
