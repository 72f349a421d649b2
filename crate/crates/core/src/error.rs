use thiserror::Error;

/// Errors produced anywhere in the pipeline.
///
/// The variants are grouped so that a front end can map them onto a small set
/// of exit codes: malformed input, an undefined coprime graph, or an exceeded
/// size cap.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("semidirect action a -> a^{i} is not defined on Z_{m} x| Z_{k}: {reason}")]
    InvalidAction { m: u64, k: u64, i: u64, reason: String },

    #[error("coprime graph is undefined for a group of order {order}: it has no nontrivial proper subgroups")]
    Undefined { order: u64 },

    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
