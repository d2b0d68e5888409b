use thiserror::Error;

/// Errors shared by every module of the workbench.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Evaluation point outside the open unit disc.
    #[error("point {point} lies outside the open unit disc (|λ| = {modulus})")]
    OutsideDisc { point: String, modulus: f64 },

    /// Radius parameter must satisfy 0 ≤ r < 1.
    #[error("radius {0} is not in [0, 1)")]
    RadiusOutOfRange(f64),

    /// More zeros than the truncated space can hold.
    #[error("zero set of total degree {degree} exceeds capacity {capacity} (dimension N+1)")]
    CapacityExceeded { degree: usize, capacity: usize },

    /// Truncation too coarse for the requested accuracy.
    #[error("truncation tail bound {bound:.3e} exceeds tolerance {tolerance:.3e} at N = {degree_cap}")]
    TruncationTooCoarse {
        bound: f64,
        tolerance: f64,
        degree_cap: usize,
    },

    /// Space tags of two operators do not line up.
    #[error("space mismatch: {left} vs {right} in {context}")]
    SpaceMismatch {
        left: String,
        right: String,
        context: String,
    },

    /// Matrix dimensions incompatible with the requested operation.
    #[error("dimension mismatch in {context}: {detail}")]
    DimensionMismatch { context: String, detail: String },

    /// Slot index out of range for a tensor space.
    #[error("slot {slot} out of range for a {n}-fold tensor space")]
    SlotOutOfRange { slot: usize, n: usize },

    /// Structural precondition violated (e.g. input not a projection).
    #[error("precondition violated in {context}: {detail}")]
    Precondition { context: String, detail: String },

    /// Zero set failed validation.
    #[error("invalid zero set: {0}")]
    InvalidZeroSet(String),

    /// Operation only defined for Hardy factors.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
