//! Command-line surface.
//!
//! Each subcommand maps its flags onto one analysis call and writes JSON or
//! CSV with the [`ExperimentManifest`] that produced it. Exit status is 0
//! when every requested check passes, 1 when a check fails and 2 on bad
//! input.

mod commands;
pub mod manifest;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

pub use manifest::{ExperimentManifest, Report};

#[derive(Debug, Parser)]
#[command(
    name = "percolattice",
    version,
    about = "Bootstrap face percolation on tilings by regular polygons"
)]
pub struct Cli {
    /// Worker threads for Monte Carlo trials.
    #[arg(long, global = true, env = "PERCOLATTICE_JOBS")]
    pub jobs: Option<usize>,
    /// Master seed; drawn from entropy and recorded when absent.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct LatticeArgs {
    /// Archimedean family, e.g. 4.8.8.
    #[arg(long)]
    pub family: Option<String>,
    /// Strip sequence, e.g. hex:0,square:1/2.
    #[arg(long)]
    pub strips: Option<String>,
    /// The 2-uniform tiling of 3.4.6.4 rosettes with one in four merged.
    #[arg(long)]
    pub merged_rosettes: bool,
    /// Hexagons of a (6.6.6) patch to split into six triangles.
    #[arg(long, value_delimiter = ',')]
    pub substitute: Vec<usize>,
    /// Split this many isolated hexagons, spread through the patch.
    #[arg(long)]
    pub spread: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ExtentArgs {
    /// Translation cells, WxH.
    #[arg(long)]
    pub cells: Option<String>,
    /// Ring radius of an open window.
    #[arg(long)]
    pub t: Option<u32>,
    /// Strip rows.
    #[arg(long)]
    pub rows: Option<u32>,
    /// Strip width in side lengths.
    #[arg(long)]
    pub width: Option<u32>,
    /// torus or open; open by default for `--t`.
    #[arg(long)]
    pub topology: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SizesArgs {
    /// Torus cells, WxH; repeatable.
    #[arg(long)]
    pub cells: Vec<String>,
    /// Square torus with at least this many faces; repeatable.
    #[arg(long)]
    pub faces: Vec<usize>,
    /// Strip rows of a torus; repeatable.
    #[arg(long)]
    pub rows: Vec<u32>,
    #[arg(long, default_value_t = 16)]
    pub width: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a patch and write it as JSON, optionally as SVG too.
    Generate {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        extent: ExtentArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the dynamics once and report infection rounds.
    Simulate {
        /// Patch JSON from `generate`.
        #[arg(long)]
        patch: Option<PathBuf>,
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        extent: ExtentArgs,
        /// Seed each face independently with this probability.
        #[arg(long)]
        p: Option<f64>,
        /// Seed exactly these faces.
        #[arg(long, value_delimiter = ',')]
        seed_faces: Vec<usize>,
        /// Seed every face.
        #[arg(long)]
        seed_all: bool,
        /// Row growth along a ring side: 3.6.3.6 or 4.6.12.
        #[arg(long)]
        replay: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Percolation frequency over a grid of p, k and sizes.
    Estimate {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        sizes: SizesArgs,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.3,0.5,0.7")]
        p: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u32>,
        #[arg(long, default_value_t = 400)]
        trials: u64,
        /// CSV path; the manifest goes beside it with `.manifest.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest k that still percolates at p on the largest size.
    Threshold {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        sizes: SizesArgs,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 400)]
        trials: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deterministic ring-growth certificate.
    Certify {
        #[command(flatten)]
        lattice: LatticeArgs,
        /// Defaults to the lattice threshold.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// Check every t from `--t` up to this.
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact tail and success bounds.
    Bounds {
        /// 4.8.8 or strips.
        #[arg(long)]
        family: String,
        /// Probability as a decimal or a fraction.
        #[arg(long)]
        p: String,
        /// Defaults to the smallest t with tail below one.
        #[arg(long)]
        t: Option<u32>,
        /// Strip sequence for the face count of the strips bound.
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex types and their classification.
    Types {
        /// List all solutions of the angle equation.
        #[arg(long)]
        enumerate: bool,
        /// Classify one type, e.g. 3.4.6.4.
        #[arg(long)]
        classify: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex-type counts of a patch.
    Census {
        #[arg(long)]
        patch: Option<PathBuf>,
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        extent: ExtentArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Collapse the triangles of a (3.12.12) torus into (6.6.6).
    Inflate {
        #[arg(long)]
        patch: Option<PathBuf>,
        #[arg(long, default_value = "6x6")]
        cells: String,
        /// Also run coupled trials at this p.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 3)]
        k: u32,
        /// Inflated patch JSON.
        #[arg(long)]
        patch_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check catalog configurations, or a face set in a patch.
    Blocking {
        /// Catalog entry name; all entries when absent.
        #[arg(long)]
        config: Option<String>,
        #[arg(long)]
        patch: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        faces: Vec<usize>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (binary name first) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let recorded: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match commands::dispatch(cli, recorded) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
