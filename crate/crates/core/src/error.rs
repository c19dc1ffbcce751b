use thiserror::Error;

/// Errors raised by graph construction, parsing and the exact solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices (pair ({u}, {v}))")]
    VertexOutOfRange { n: usize, vertex: usize, u: usize, v: usize },

    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} exceeds the size guard: {actual} > {limit} (pass --guard-override to lift it)")]
    SizeGuard { what: String, limit: usize, actual: usize },

    #[error("coloring covers {got} vertices but the graph has {expected}")]
    ColoringLength { expected: usize, got: usize },

    #[error("color {color} of vertex {vertex} is outside the palette 1..={k}")]
    ColorOutOfPalette { vertex: usize, color: u32, k: u32 },

    #[error("vertex {0} is not in the deleted set")]
    NotDeleted(usize),

    #[error("vertex {0} is colored but belongs to the deleted set")]
    ColoredDeletedVertex(usize),

    #[error("invalid odd-representative instance: {0}")]
    OddRepInstance(String),

    #[error("parameter `{0}` must be bound for this catalog")]
    UnboundParameter(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
