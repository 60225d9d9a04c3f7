use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for framework with {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("framework has {n} vertices, exceeding the brute-force limit of {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("induced subgraph is not acyclic")]
    NotADag,

    #[error("graph is not oriented; route it through the oriented translation first")]
    NotOriented,

    #[error("graph has self-loops; apply the loopless translation first")]
    SelfLoops,

    #[error("set violates the duplicate-pairing property of the oriented translation")]
    PairingViolation,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("binomial coefficient overflow; use the exhaustive family instead")]
    BinomialOverflow,

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
