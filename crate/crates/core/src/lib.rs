//! Bootstrap face percolation on plane tilings by regular polygons.
//!
//! A face of the tiling becomes infected once at least `k` of its
//! edge-neighbors are infected, and stays infected. The crate builds finite
//! windows of Archimedean lattices, strip stackings and locally modified
//! lattices, runs the dynamics, and checks threshold claims by blocking
//! configurations, growth certificates, closed-form bounds and Monte Carlo
//! estimation.

pub mod analysis;
pub mod cli;
pub mod engine;
pub mod error;
pub mod tiling;

pub use error::{Error, Result};
