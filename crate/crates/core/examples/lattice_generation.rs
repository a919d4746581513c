//! Tori for all eleven Archimedean lattices, plus an open (4.8.8) window
//! written as SVG.

use percolattice::tiling::svg::render_svg;
use percolattice::tiling::{build_archimedean, torus_side_for, Extent, Family, Topology};

fn main() -> percolattice::Result<()> {
    for f in Family::ALL {
        let side = torus_side_for(f, 1000);
        let p = build_archimedean(
            f,
            Extent::Cells {
                width: side,
                height: side,
            },
            Topology::Torus,
        )?;
        let census: Vec<String> = p
            .vertex_census()
            .iter()
            .map(|(t, n)| format!("{t} x{n}"))
            .collect();
        println!(
            "({f}) {side}x{side} cells: {} faces, max degree {}, {}",
            p.len(),
            p.max_degree(),
            census.join(" ")
        );
    }
    let window = build_archimedean(
        Family::TruncatedSquare,
        Extent::Radius { t: 3 },
        Topology::Open,
    )?;
    let out = std::env::temp_dir().join("truncated_square_t3.svg");
    std::fs::write(&out, render_svg(&window, None, ""))?;
    println!(
        "open (4.8.8) t=3: {} octagons, {} squares -> {}",
        window.faces_with_sides(8).len(),
        window.faces_with_sides(4).len(),
        out.display()
    );
    Ok(())
}
