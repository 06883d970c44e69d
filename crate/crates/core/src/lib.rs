//! Isomorphism-injective encodings of labeled multigraphs by exact node
//! parsing, with tools for isomorphism testing, shared-subgraph bounds and
//! ordering statistics.

pub mod analysis;
pub mod datasets;
pub mod edgelist;
pub mod encoding;
pub mod engine;
pub mod error;
pub mod graph;
pub mod iso;
pub mod seeds;
pub mod tudataset;
pub mod wl;

pub use error::{Error, Result};
pub use graph::LabeledGraph;
