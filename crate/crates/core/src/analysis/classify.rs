//! Sorting the 21 angle-sum solutions into three kinds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tiling::vertex_type::{is_parity_infeasible, RIGID_TYPES};
use crate::tiling::{Family, VertexType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TypeClass {
    /// No edge-to-edge tiling has a vertex of this type.
    Infeasible,
    /// Any tiling containing the type has threshold at most 2; the named
    /// catalog configurations are the witnesses.
    ForcesThresholdLe2 { witnesses: Vec<String> },
    /// The type appears only in its Archimedean lattice.
    RigidLatticeType { family: Family },
}

pub fn classify_vertex_type(v: &VertexType) -> Result<TypeClass> {
    if !v.is_catalog() {
        return Err(Error::NotInCatalog(v.to_string()));
    }
    if is_parity_infeasible(v) {
        return Ok(TypeClass::Infeasible);
    }
    if RIGID_TYPES.contains(&v.to_string().as_str()) {
        let family = Family::ALL
            .into_iter()
            .find(|f| f.vertex_type() == *v)
            .ok_or_else(|| Error::NotInCatalog(v.to_string()))?;
        return Ok(TypeClass::RigidLatticeType { family });
    }
    let names: &[&str] = if v.consecutive_pairs().contains(&(3, 3)) {
        &["strips-a"]
    } else {
        match v.to_string().as_str() {
            "4.4.4.4" => &["strips-c"],
            "3.4.3.12" => &["tri-square-tri"],
            "3.4.4.6" => &["tri-square-tri", "square-block", "tri-square-square-tri"],
            "3.4.6.4" => &["rosette-31"],
            _ => return Err(Error::NotInCatalog(v.to_string())),
        }
    };
    Ok(TypeClass::ForcesThresholdLe2 {
        witnesses: names.iter().map(|s| s.to_string()).collect(),
    })
}
