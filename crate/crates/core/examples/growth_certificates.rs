//! Ring-by-ring growth certificates at the threshold and one above it.

use percolattice::analysis::{certify_growth, Verdict};
use percolattice::tiling::{Family, LatticeSpec, StripSequence};

fn main() -> percolattice::Result<()> {
    let mut specs: Vec<(LatticeSpec, u32)> = [
        Family::TruncatedSquare,
        Family::Hex,
        Family::Kagome,
        Family::TruncatedTrihex,
    ]
    .map(|f| (f.into(), f.threshold()))
    .to_vec();
    specs.push((
        LatticeSpec::Strips {
            sequence: StripSequence::mixed_example(),
        },
        2,
    ));
    for (spec, k) in specs {
        for t in 1..=3 {
            let at = certify_growth(&spec, k, t)?;
            let above = certify_growth(&spec, k + 1, t)?;
            let why = match &above.verdict {
                Verdict::Fail { witness } => format!(
                    "{} stage, {} faces missing",
                    witness.stage,
                    witness.missing.len()
                ),
                Verdict::Pass => "unexpected pass".into(),
            };
            println!(
                "{spec} t={t}: k={k} {} ({} seeds tried); k={} {why}",
                if at.passed() { "pass" } else { "FAIL" },
                at.checked_seed_positions,
                k + 1
            );
        }
    }
    Ok(())
}
