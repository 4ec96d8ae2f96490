use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a cycle needs at least 2 elements, got {0}")]
    TooFewElements(usize),
    #[error("duplicate element {0} in cycle")]
    DuplicateElement(usize),
    #[error("cycle elements must be positive")]
    NonpositiveElement,
    #[error("element {element} exceeds ambient size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("not a minimal factorization of the {0}-cycle")]
    NotMinimalNCycle(usize),
    #[error("cycle ({0}) is not increasing")]
    NotIncreasing(String),
    #[error("invalid plane tree: {0}")]
    InvalidTree(String),
    #[error("invalid cactus: {0}")]
    InvalidCactus(String),
    #[error("cycles are not arrangeable: condition {condition} fails: {detail}")]
    NotArrangeable { condition: u8, detail: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("brute-force oracle refused: n = {n} exceeds work cap {cap}")]
    OracleTooLarge { n: usize, cap: usize },
    #[error("requested order {0} exceeds truncation weight {1}")]
    ExceedsTruncation(usize, usize),
    #[error("ambient size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
