use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a partition: parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("containment violation: {mu:?} is not contained in {lambda:?}")]
    Containment { lambda: Vec<u32>, mu: Vec<u32> },
    #[error("cell set is not a skew shape: {0}")]
    NotSkew(String),
    #[error("operation requires a connected skew diagram")]
    Disconnected,
    #[error("operation requires a non-empty diagram")]
    EmptyDiagram,
    #[error("not a ribbon: {0}")]
    NotRibbon(String),
    #[error("incompatible placement: {0}")]
    Placement(String),
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),
    #[error("enumeration cap exceeded: requested {requested}, cap {cap} (set SKEWKIT_MAX_CELLS to raise)")]
    CapExceeded { requested: usize, cap: usize },
    #[error("precondition failure: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
