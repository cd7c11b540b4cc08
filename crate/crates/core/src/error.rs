use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("closure exceeded the element ceiling of {ceiling}")]
    CeilingExceeded { ceiling: usize },

    #[error("empty generator list")]
    NoGenerators,

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("group is trivial")]
    TrivialGroup,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid braid word: {0}")]
    InvalidWord(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("target mismatch: {0}")]
    TargetMismatch(String),

    #[error("no sign satisfies the partial commutation relation for ({i},{j},{k}) in B_{n}")]
    NoEpsilon { i: usize, j: usize, k: usize, n: usize },

    #[error("target group of order {order} exceeds the search limit {limit}")]
    TargetTooLarge { order: usize, limit: usize },

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("worker pool: {0}")]
    Workers(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
