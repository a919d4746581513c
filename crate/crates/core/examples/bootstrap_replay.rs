//! Infection spreading along the top side of a ring from one extra face.

use percolattice::analysis::row_growth_replay;
use percolattice::tiling::svg::{render_svg, round_classes, ROUND_STYLE};
use percolattice::tiling::Family;

fn main() -> percolattice::Result<()> {
    for family in [Family::Kagome, Family::TruncatedTrihex] {
        let r = row_growth_replay(family, 6)?;
        let y0 = r.patch.faces[r.seed].center[1];
        // Faces near the seed's row, left to right, with their rounds.
        let mut row: Vec<(f64, u32, u32)> = (0..r.patch.len())
            .filter(|&f| {
                (r.patch.faces[f].center[1] - y0).abs() < 2.5
                    && !r.initial[..r.initial.len() - 1].contains(&f)
            })
            .filter_map(|f| r.rounds[f].map(|n| (r.patch.faces[f].center[0], r.patch.sides(f), n)))
            .filter(|(x, _, _)| x.abs() < 12.0)
            .collect();
        row.sort_by(|a, b| a.0.total_cmp(&b.0));
        println!("({family}) k={}:", r.k);
        for (x, sides, n) in row {
            println!("  x={x:>6.2} {sides:>2}-gon round {n}");
        }
        let out = std::env::temp_dir().join(format!("replay_{}.svg", family.name()));
        std::fs::write(
            &out,
            render_svg(&r.patch, Some(&round_classes(&r.rounds)), ROUND_STYLE),
        )?;
        println!("  -> {}", out.display());
    }
    Ok(())
}
