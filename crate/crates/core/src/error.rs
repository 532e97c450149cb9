use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("wrong group kind: {0}")]
    WrongGroupKind(String),

    #[error("brute-force oracle cap exceeded: |G| = {order} > {cap}")]
    OracleCapExceeded { order: u64, cap: u64 },

    #[error("graph too large: {vertices} vertices > cap {cap}")]
    GraphTooLarge { vertices: u64, cap: u64 },

    #[error("group too large for automorphism enumeration: |G| = {order} > {cap}")]
    GroupTooLarge { order: u64, cap: u64 },

    #[error("partition is not equitable: vertex {vertex} sees {got} neighbours in part {part}, expected {expected}")]
    EquitabilityViolated {
        vertex: usize,
        part: usize,
        got: usize,
        expected: usize,
    },

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("malformed {format} input: {msg}")]
    Decode { format: &'static str, msg: String },

    #[error("graph is not threshold: alternating 4-cycle {0:?}")]
    NotThreshold([usize; 4]),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix dimension {dim} exceeds eigensolver cap {cap}")]
    MatrixTooLarge { dim: usize, cap: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0} is not prime")]
    NonPrimeBase(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
