//! The 21 vertex types and how each is classified.

use percolattice::analysis::{classify_vertex_type, TypeClass};
use percolattice::tiling::enumerate_vertex_types;

fn main() -> percolattice::Result<()> {
    for t in enumerate_vertex_types() {
        let what = match classify_vertex_type(&t)? {
            TypeClass::Infeasible => "cannot occur".to_string(),
            TypeClass::ForcesThresholdLe2 { witnesses } => {
                format!("threshold <= 2 via {}", witnesses.join(", "))
            }
            TypeClass::RigidLatticeType { family } => {
                format!("only in ({family}), threshold {}", family.threshold())
            }
        };
        println!("{t:<12} {what}");
    }
    Ok(())
}
