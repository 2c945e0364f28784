use thiserror::Error;

/// Errors produced by graph construction and the routing algorithms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid boundary: x [{x_min}, {x_max}], y [{y_min}, {y_max}]")]
    InvalidBoundary {
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
    },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid edge {u}->{v} (w={w}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        w: f64,
        reason: &'static str,
    },
    #[error("negative edge weight {w} on {u}->{v}")]
    NegativeWeight { u: usize, v: usize, w: f64 },
    #[error("negative-weight cycle detected")]
    NegativeCycle,
    #[error("vertex {to} is unreachable from {from}")]
    Unreachable { from: usize, to: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
