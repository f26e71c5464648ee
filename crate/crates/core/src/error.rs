use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator {generator} is out of range for n = {n}")]
    IndexOutOfRange { generator: String, n: usize },

    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("expected a homogeneous element of degree {expected}")]
    Degree { expected: usize },

    #[error("generator {0} is not allowed here")]
    ForeignGenerator(String),

    #[error("index sets {0} and {1} violate the star condition")]
    StarViolation(String, String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("reduction did not terminate within {0} steps")]
    NonTermination(usize),

    #[error("pattern mismatch: {0}")]
    Pattern(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
