//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet mismatch: `{left}` vs `{right}`")]
    AlphabetMismatch { left: String, right: String },

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("series composition requires a zero constant term in the inner series")]
    NonzeroInnerConstant,

    #[error("length/weight mismatch: {0}")]
    LengthMismatch(String),

    #[error("empty word")]
    EmptyWord,

    #[error("unknown letter `{name}` in alphabet `{alphabet}`")]
    UnknownLetter { name: String, alphabet: String },

    #[error("non-generic q: the length-preserving system for `{word}` is singular at q = {q}")]
    NonGenericQ { q: String, word: String },

    #[error("divergent series: the leading letter has exponent 1 and trivial root of unity")]
    DivergentSum,

    #[error("`{0}` is not Lyndon")]
    NotLyndon(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("leading coefficient of the reweighting family must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("invalid alphabet config (line {line}): {message}")]
    AlphabetConfig { line: usize, message: String },

    #[error("{0}")]
    Domain(String),

    /// A condition that the underlying theory guarantees cannot occur.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
