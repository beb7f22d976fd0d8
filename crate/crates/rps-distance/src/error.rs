use thiserror::Error;

/// Errors produced by frame/event construction, mass validation, matrix
/// building, and distance evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("frame of discernment must have at least one element")]
    EmptyFrame,

    #[error("frame labels must be pairwise distinct and match the frame size (expected {expected}, got {got})")]
    BadLabels { expected: usize, got: usize },

    #[error("element index {index} out of range for a {size}-element frame")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("ordered focal set contains duplicate element index {index}")]
    DuplicateElement { index: usize },

    #[error("ordered focal set must be non-empty")]
    EmptyEvent,

    #[error("event code ({l}, {o}) is invalid: {reason}")]
    BadEventCode { l: u64, o: u64, reason: String },

    #[error("permutation event space for a {size}-element frame is too large to enumerate")]
    PesTooLarge { size: usize },

    #[error("mass {mass} for event {event} outside (0, 1]")]
    BadMass { event: String, mass: f64 },

    #[error("duplicate assignment for event {event}")]
    DuplicateAssignment { event: String },

    #[error("masses sum to {sum}, expected 1 within 1e-9")]
    MassSum { sum: f64 },

    #[error("operands are defined on different frames")]
    FrameMismatch,

    #[error("vectors and weighting matrix do not share a universe (dimensions {left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },

    #[error("Jaccard index undefined for two empty sets")]
    EmptySets,

    #[error("depth weights invalid: {reason}")]
    BadWeights { reason: String },

    #[error("depth t={t} out of range 1..={max}")]
    DepthOutOfRange { t: usize, max: usize },

    #[error("orness {orn} outside [0, 1]")]
    OrnessOutOfRange { orn: f64 },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("weighting matrix is indefinite (quadratic form {value}); apply the positive-definiteness correction")]
    IndefiniteMatrix { value: f64 },

    #[error("unknown label {label:?}")]
    UnknownLabel { label: String },

    #[error("unknown pmf {name:?} in document")]
    UnknownPmf { name: String },

    #[error("unknown table id {id:?}")]
    UnknownTable { id: String },

    #[error("document parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
