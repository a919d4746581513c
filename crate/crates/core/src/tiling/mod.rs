//! Tilings by regular polygons and their face-adjacency patches.

pub mod archimedean;
pub mod inflate;
pub mod patch;
pub mod ring;
pub mod strips;
pub mod substitution;
pub mod svg;
pub mod template;
pub mod vertex_type;

pub use archimedean::{build_archimedean, build_merged_rosettes, torus_side_for};
pub use inflate::inflate_3_12_12;
pub use patch::{Extent, Face, Family, LatticeSpec, TilingPatch, Topology, Vertex};
pub use ring::{ring_decomposition, RingGroup, RingSpec};
pub use strips::{build_strip_tiling, StripDesc, StripKind, StripSequence};
pub use substitution::substitute_hexagons;
pub use vertex_type::{check_no_successive_agreement, enumerate_vertex_types, VertexType};

use std::collections::BTreeMap;

/// Interior vertices by canonical type.
pub fn vertex_census(patch: &TilingPatch) -> BTreeMap<VertexType, usize> {
    patch.vertex_census()
}

/// Any supported tiling at the given extent.
pub fn build(spec: &LatticeSpec, extent: Extent, topology: Topology) -> crate::Result<TilingPatch> {
    use crate::Error;
    match (spec, extent) {
        (LatticeSpec::Archimedean { family }, e) => build_archimedean(*family, e, topology),
        (LatticeSpec::Strips { sequence }, Extent::Rows { rows, width }) => {
            build_strip_tiling(sequence, rows, width, topology)
        }
        (LatticeSpec::MergedRosettes, Extent::Cells { width, height })
            if topology == Topology::Torus =>
        {
            build_merged_rosettes(width, height)
        }
        (LatticeSpec::ModifiedHex { substitutions }, Extent::Cells { .. }) => {
            let base = build_archimedean(Family::Hex, extent, topology)?;
            substitute_hexagons(&base, &substitutions.iter().copied().collect())
        }
        (spec, e) => Err(Error::InvalidExtent(format!(
            "{spec} cannot be built at {e} ({topology:?})"
        ))),
    }
}
