use thiserror::Error;

/// Errors produced by the permutree library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty decoration word")]
    EmptyDecoration,
    #[error("invalid letter '{letter}' at position {position}")]
    InvalidLetter { letter: char, position: usize },
    #[error("decoration of length {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("pair ({0},{1}) is not a pair i<j within [{2}]")]
    PairOutOfRange(usize, usize, usize),
    #[error("size mismatch: {0} vs {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("no edge {0}->{1} in the permutree")]
    NotAnEdge(usize, usize),
    #[error("slot {slot} is not defined for vertex {vertex}")]
    SlotUndefined { vertex: usize, slot: &'static str },
    #[error("invalid permutree: {0}")]
    InvalidPermutree(String),
    #[error("not a valid inversion set: {0}")]
    InvalidInversionSet(String),
    #[error("decoration {0} is not updown on interior letters")]
    NotBoolean(String),
    #[error("malformed corner: {0}")]
    MalformedCorner(String),
    #[error("n = {n} exceeds the enumeration bound {max}")]
    BoundExceeded { n: usize, max: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
