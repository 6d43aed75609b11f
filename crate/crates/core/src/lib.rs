//! Exact spectral and structural verification for `s`-clique extensions of
//! square grid graphs.
//!
//! The crate builds the graphs involved (grids, clique extensions, the
//! Shrikhande graph), certifies integral spectra with exact integer
//! arithmetic, checks the regularity identities these graphs satisfy, finds
//! their line structure through maximal cliques, and reconstructs the grid
//! from the quotient by closed-twin classes. [`reconstruct::run_pipeline`]
//! strings all of it together.

pub mod bitset;
pub mod cli;
pub mod cliques;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod lines;
pub mod matrix;
pub mod reconstruct;
pub mod regularity;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{
    build_complete, build_grid, build_shrikhande, cartesian_product, clique_extension, complement,
    induced_subgraph, local_graph, ExtensionParams, Graph, LocalGraph, VertexSet,
};
pub use reconstruct::{run_pipeline, PipelineReport, Stage, Verdict};
pub use spectra::Spectrum;
