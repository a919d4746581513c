use serde::{Deserialize, Serialize};

use crate::tiling::{Extent, LatticeSpec};

/// Everything needed to rerun a command and get the same bytes back.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentManifest {
    pub command: String,
    /// Arguments after the binary name, with `--seed` made explicit.
    pub args: Vec<String>,
    pub lattice: Option<LatticeSpec>,
    pub extents: Vec<Extent>,
    pub p_grid: Vec<f64>,
    pub k_range: Vec<u32>,
    pub trials: Option<u64>,
    pub master_seed: Option<u64>,
    /// "flag" or "entropy".
    pub seed_source: Option<String>,
    pub outputs: Vec<String>,
    pub tool_version: String,
}

impl ExperimentManifest {
    pub fn new(command: &str, args: &[String]) -> Self {
        ExperimentManifest {
            command: command.to_string(),
            args: args.to_vec(),
            lattice: None,
            extents: Vec::new(),
            p_grid: Vec::new(),
            k_range: Vec::new(),
            trials: None,
            master_seed: None,
            seed_source: None,
            outputs: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Records the seed; an entropy seed is appended to `args` so the
    /// recorded command line reproduces the run.
    pub fn with_seed(mut self, seed: u64, from_flag: bool) -> Self {
        self.master_seed = Some(seed);
        self.seed_source = Some(if from_flag { "flag" } else { "entropy" }.to_string());
        if !from_flag {
            self.args.push("--seed".into());
            self.args.push(seed.to_string());
        }
        self
    }
}

/// A result with the manifest that produced it.
#[derive(Debug, Serialize)]
pub struct Report<'a, T: Serialize> {
    pub manifest: &'a ExperimentManifest,
    pub result: T,
}
