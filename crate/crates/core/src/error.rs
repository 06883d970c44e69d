use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index} endpoint {endpoint} out of range for {num_vertices} vertices")]
    EdgeOutOfRange {
        index: usize,
        endpoint: usize,
        num_vertices: usize,
    },

    #[error("vertex {vertex} has label {label}; labels must be >= 1")]
    InvalidLabel { vertex: usize, label: u64 },

    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: parse error at line {line}: {message}")]
    FileParse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("missing required file {0}")]
    MissingFile(PathBuf),

    #[error("{what} requires at most {limit}, got {actual}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("edge order is not a permutation of the graph's edges: {0}")]
    InvalidOrder(String),

    #[error("generator gave up after {attempts} attempts: {reason}")]
    GenerationExhausted { attempts: usize, reason: String },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("unknown {kind} '{value}'")]
    Unknown { kind: &'static str, value: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
