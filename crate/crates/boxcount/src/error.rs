//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

/// Errors surfaced by enumeration, exact arithmetic, and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// A symmetry operation was applied to a box that does not admit it,
    /// e.g. transposition on a box with `a != b`.
    #[error("box {a}x{b}x{c} is incompatible with {what}")]
    IncompatibleBox { a: u32, b: u32, c: u32, what: String },

    /// A counting method is not implemented for the requested class.
    #[error("method `{method}` is not supported for class {class}")]
    UnsupportedMethod { class: String, method: String },

    /// Malformed textual input (binary sequence, height matrix, ...).
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// An enumeration stream exceeded the configured cardinality cap.
    #[error("cardinality cap of {cap} items exceeded")]
    ResourceCap { cap: u64 },

    /// An exactness contract was violated (non-exact polynomial division,
    /// a singular pairing, ...). This always signals a wrong formula or a
    /// wrong convention and is never masked.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// A q = -1 specialization had a pole (denominator vanishes to higher
    /// order than the numerator).
    #[error("pole at q = -1: {0}")]
    PoleAtMinusOne(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 usage/compatibility, 3 resource
    /// cap, 4 internal integrity.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::IncompatibleBox { .. }
            | Error::UnsupportedMethod { .. }
            | Error::MalformedInput(_) => 2,
            Error::ResourceCap { .. } => 3,
            Error::Integrity(_) | Error::PoleAtMinusOne(_) => 4,
        }
    }
}
