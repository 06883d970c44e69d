//! The parsing loop: edge sorting, component tracking, encoding updates.

mod config;
pub mod output;
mod run;
mod sort;
mod state;

pub use config::{EdgeSortMode, EndpointMode, SortConfig, Variant};
pub use run::{
    Encoder, EncodingKey, EncodingRun, MergeRecord, TraceStep, DEFAULT_ENUMERATION_GUARD,
};
pub use sort::{edge_key, edge_keys, sort_edges, tie_blocks, PlannedEdge};
pub use state::ParseState;
