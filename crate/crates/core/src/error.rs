use thiserror::Error;

/// Errors raised by partition construction, diagram manipulation and the
/// involutions built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0}")]
    NegativePart(i64),
    #[error("more than one zero part")]
    DuplicateZero,
    #[error("partition {0} has a zero part")]
    ZeroPartPresent(String),
    #[error("{partition} is not a member of {family}")]
    NotInFamily { partition: String, family: String },
    #[error("row {row} of {partition} does not carry a leg hook")]
    InvalidHookRow { partition: String, row: usize },
    #[error("no row of {partition} can take a leg hook of length {length}")]
    NoValidPosition { partition: String, length: u32 },
    #[error("part {part} is not a multiple of {modulus}")]
    NotMultipleOfModulus { part: u32, modulus: u32 },
    #[error("{family} cannot be enumerated")]
    UnsupportedFamily { family: String },
    #[error("weight {kind} is not defined on {partition}")]
    WrongFamilyForWeight { partition: String, kind: String },
    #[error("series truncations differ: {0} vs {1}")]
    MismatchedTruncation(usize, usize),
    #[error("infinite product has a factor of q-degree 0")]
    DivergentAtQ0,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("modulus parameter m must be at least 1")]
    ZeroModulus,
    /// An internal consistency check failed; this always indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
