use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("identity check failed: {0}")]
    Identity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
