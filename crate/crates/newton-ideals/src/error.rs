use thiserror::Error;

/// Errors shared across the library.
///
/// Parse errors carry a byte offset into the input; everything else is a
/// precondition violation or a bounded search that ran out of room.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("inconsistent variable count: {found} variables, ambient dimension is {ambient}")]
    VariableCount { found: usize, ambient: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero ideal has no Newton polyhedron")]
    ZeroIdeal,

    #[error("unit ideal has no proper reduction")]
    UnitIdeal,

    #[error("scaling factor must be positive")]
    ZeroScale,

    #[error("hyperplane normal must be nonnegative and nonzero")]
    InvalidHyperplane,

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorIndex { index: usize, count: usize },

    #[error("support set must be nonempty")]
    EmptySupport,

    #[error("exponent list must match the support and be strictly positive")]
    BadExponents,

    #[error("ideal is not extremal; reduce it first")]
    NotExtremal,

    #[error("candidate ideal is not a reduction")]
    NotAReduction,

    #[error("reduction number exceeds cutoff {cutoff}")]
    CutoffExceeded { cutoff: usize },

    #[error("arithmetic overflow in {context}")]
    Overflow { context: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
