//! T-Cycle on embedded planar graphs: an exact tree-decomposition solver, an
//! irrelevant-vertex reduction driven by radial distance, protrusion-based
//! kernelization, and brute-force oracles that check every stage on small
//! instances.

pub mod cycles;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod generate;
pub mod kernel;
pub mod oracle;
pub mod planar_core;
pub mod tcycle_dp;
pub mod treewidth;

pub use error::{Error, Result};
pub use planar_core::{EdgeId, EmbeddedGraph, Vertex};
