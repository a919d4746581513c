//! Finite growth certificates.
//!
//! Starting from a fully infected `core(t)`:
//! (i) one infected face on a side, at any seedable position, fills that side;
//! (ii) one infected face per side then fills all of `core(t+1)`;
//! (ii') every side face infected fills `core(t+1)`, corners included.
//! All runs happen on the open window `core(t+2)`. Faces outside the
//! window only add infected neighbors in the real tiling, so a pass here is
//! a pass there.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::engine::{run_bootstrap, seed_explicit};
use crate::error::Result;
use crate::tiling::{ring_decomposition, LatticeSpec, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    /// "side", "closure" or "closure-all".
    pub stage: String,
    pub group: Option<String>,
    /// The extra seeded face, for side failures.
    pub seed: Option<usize>,
    /// Faces that should have been infected but were not.
    pub missing: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { witness: FailureWitness },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthCertificate {
    pub lattice: String,
    pub k: u32,
    pub t: u32,
    pub checked_seed_positions: usize,
    pub corner_closure_verified: bool,
    pub verdict: Verdict,
}

impl GrowthCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn closure(ring: &RingSpec, seeds: &[usize], k: u32) -> Result<Vec<bool>> {
    let (state, _) = run_bootstrap(&ring.patch, seed_explicit(&ring.patch, seeds)?, k)?;
    Ok(state.infected)
}

fn missing(infected: &[bool], wanted: &[usize]) -> Vec<usize> {
    wanted.iter().copied().filter(|&f| !infected[f]).collect()
}

pub fn certify_growth(spec: &LatticeSpec, k: u32, t: u32) -> Result<GrowthCertificate> {
    let ring = ring_decomposition(spec, t)?;
    certify_on(&ring, k)
}

pub fn certify_on(ring: &RingSpec, k: u32) -> Result<GrowthCertificate> {
    let mut cert = GrowthCertificate {
        lattice: ring.family.to_string(),
        k,
        t: ring.t,
        checked_seed_positions: 0,
        corner_closure_verified: false,
        verdict: Verdict::Pass,
    };
    let fail = |mut cert: GrowthCertificate, witness: FailureWitness| {
        cert.verdict = Verdict::Fail { witness };
        Ok(cert)
    };

    for side in ring.sides() {
        for &f in &side.seedable {
            let mut seeds = ring.core.clone();
            seeds.push(f);
            let infected = closure(ring, &seeds, k)?;
            cert.checked_seed_positions += 1;
            let gap = missing(&infected, &side.faces);
            if !gap.is_empty() {
                let w = FailureWitness {
                    stage: "side".into(),
                    group: Some(side.label.clone()),
                    seed: Some(f),
                    missing: gap,
                };
                return fail(cert, w);
            }
        }
    }

    let mut seeds = ring.core.clone();
    seeds.extend(ring.sides().filter_map(|s| s.seedable.first().copied()));
    let gap = missing(&closure(ring, &seeds, k)?, &ring.next);
    if !gap.is_empty() {
        return fail(
            cert,
            FailureWitness {
                stage: "closure".into(),
                group: None,
                seed: None,
                missing: gap,
            },
        );
    }

    let mut seeds: BTreeSet<usize> = ring.core.iter().copied().collect();
    seeds.extend(ring.sides().flat_map(|s| s.faces.iter().copied()));
    let seeds: Vec<usize> = seeds.into_iter().collect();
    let gap = missing(&closure(ring, &seeds, k)?, &ring.next);
    if !gap.is_empty() {
        return fail(
            cert,
            FailureWitness {
                stage: "closure-all".into(),
                group: None,
                seed: None,
                missing: gap,
            },
        );
    }
    cert.corner_closure_verified = true;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{Family, StripSequence};

    #[test]
    fn truncated_square_passes_at_three_only() {
        let spec: LatticeSpec = Family::TruncatedSquare.into();
        for t in 1..=3 {
            let c = certify_growth(&spec, 3, t).unwrap();
            assert!(c.passed(), "t={t}: {c:?}");
            assert!(c.corner_closure_verified);
            assert!(c.checked_seed_positions > 0);
            assert!(!certify_growth(&spec, 4, t).unwrap().passed());
        }
    }

    #[test]
    fn hexagonal_families() {
        for (family, k) in [
            (Family::Hex, 3),
            (Family::Kagome, 2),
            (Family::TruncatedTrihex, 3),
        ] {
            let spec: LatticeSpec = family.into();
            for t in 1..=2 {
                assert!(
                    certify_growth(&spec, k, t).unwrap().passed(),
                    "{family} t={t}"
                );
                assert!(
                    !certify_growth(&spec, k + 1, t).unwrap().passed(),
                    "{family} t={t} k+1"
                );
            }
        }
    }

    #[test]
    fn strips_pass_at_two() {
        for seq in ["hex:0", "square:0", "hex:0,square:1/2", "hex:0,hex:1"] {
            let spec = LatticeSpec::Strips {
                sequence: seq.parse::<StripSequence>().unwrap(),
            };
            for t in 1..=2 {
                let c = certify_growth(&spec, 2, t).unwrap();
                assert!(c.passed(), "{seq} t={t}: {c:?}");
                assert!(
                    !certify_growth(&spec, 3, t).unwrap().passed(),
                    "{seq} t={t} k=3"
                );
            }
        }
    }
}
