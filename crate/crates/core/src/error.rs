use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has {got} entries, expected {expected} for a carrier of size {n}")]
    BadShape {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("entry {value} at ({row},{col}) is out of range for a carrier of size {n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("invalid labels: {0}")]
    BadLabels(String),

    #[error("carrier sizes differ: {0} vs {1}")]
    MismatchedCarrier(usize, usize),

    #[error("carrier of size {n} exceeds the bound {bound} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("construction would have {size} elements, above the cap {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("operation is not associative: witness {0:?}")]
    NotAssociative(Vec<usize>),

    #[error("dot operation is not associative: witness {0:?}")]
    DotNotAssociative(Vec<usize>),

    #[error("algebra is not an associative pentagon algebra: {0}")]
    NotAnApa(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("free band supports at most 3 generators, got {0}")]
    TooManyGenerators(usize),

    #[error("product of words of length {left} and {right} exceeds the length bound {bound}")]
    ProductOverflow {
        left: usize,
        right: usize,
        bound: usize,
    },

    #[error("star operation is not in the required variety: {0}")]
    StarNotInVariety(String),

    #[error("target semigroup is not in the required variety: {0}")]
    TargetNotInVariety(String),

    #[error("tensor construction is not well defined: {0}")]
    ConstructionInconsistent(String),

    #[error("map is not an idempotent endomorphism of the dot semigroup: {0}")]
    GammaNotIdempotentEndomorphism(String),

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("rewriting did not terminate: {0}")]
    NonTerminating(String),

    #[error("product {0} does not reduce to a normal form")]
    NotClosed(String),

    #[error("bad argument: {0}")]
    InvalidArgument(String),

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("range error at line {line}, column {col}: entry {value} is not below {n}")]
    Range {
        line: usize,
        col: usize,
        value: usize,
        n: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
