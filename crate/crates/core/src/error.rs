use thiserror::Error;

/// Errors produced by the symbolic and numeric layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("index {index} out of range for {kind} with n = {n}")]
    IndexOutOfRange {
        kind: &'static str,
        index: u32,
        n: u32,
    },

    #[error("polynomial is not parity-homogeneous: `{even_term}` is even while `{odd_term}` is odd")]
    MixedParity { even_term: String, odd_term: String },

    #[error("polynomial is not grade-homogeneous: terms `{left}` and `{right}` carry different grades")]
    NonHomogeneous { left: String, right: String },

    #[error("expected a polynomial in phi only, found `{found}`")]
    NotPhiPolynomial { found: String },

    #[error("mixed ghost content: {detail}")]
    MixedGhost { detail: String },

    #[error("invalid symplectic matrix: {detail}")]
    InvalidOmega { detail: String },

    #[error("invalid model: {detail}")]
    InvalidModel { detail: String },

    #[error("degree cap {cap} is smaller than the vector-field component degree {deg}")]
    DegreeCapTooSmall { cap: u32, deg: u32 },

    #[error("cohomology basis dimension {dim} exceeds the configured cap {cap}")]
    BasisTooLarge { dim: usize, cap: usize },

    #[error("unsupported for numeric evolution: {detail}")]
    Unsupported { detail: String },

    #[error("dimension mismatch: {detail}")]
    Dimension { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
