//! Verification built on the engine.

pub mod blocking;
pub mod bounds;
pub mod catalog;
pub mod certificate;
pub mod classify;
pub mod config;
pub mod experiments;
pub mod matching;
pub mod montecarlo;
pub mod replay;
pub mod threshold;

pub use blocking::{verify_blocking, BlockingReport};
pub use bounds::{
    bound_report, minimal_t, parse_probability, success_lower_bound, tail_bound, BoundFamily,
    BoundReport,
};
pub use catalog::{
    audit_entry, catalog_configurations, catalog_entries, CatalogAudit, CatalogEntry, Home,
};
pub use certificate::{certify_growth, certify_on, FailureWitness, GrowthCertificate, Verdict};
pub use classify::{classify_vertex_type, TypeClass};
pub use config::{ConfigFace, Configuration};
pub use experiments::{
    inflation_consistency_check, modified_hex_experiment, spread_substitutions, InflationReport,
    ModifiedHexReport, ModifiedHexRow,
};
pub use matching::{find_copies, is_appearance};
pub use montecarlo::{monte_carlo_estimate, wilson_interval, Estimate};
pub use replay::{row_growth_replay, RowReplay};
pub use threshold::{estimate_threshold, estimate_threshold_on, ThresholdEstimate};
