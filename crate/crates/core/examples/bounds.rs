//! Exact tail bounds and the smallest useful ring index.

use percolattice::analysis::{bound_report, parse_probability, BoundFamily};
use percolattice::tiling::StripSequence;

fn main() -> percolattice::Result<()> {
    let seq = StripSequence::mixed_example();
    for family in [BoundFamily::TruncatedSquare, BoundFamily::Strips] {
        for p in ["1/10", "1/4", "1/2", "3/4"] {
            let r = bound_report(family, &parse_probability(p)?, None, &seq)?;
            println!(
                "{family:?} p={p}: t={} tail {} ({:.4}), needs {} faces, success >= 10^{:.1}",
                r.t, r.tail, r.tail_f64, r.required_faces, r.lower_bound_log10
            );
        }
    }
    Ok(())
}
