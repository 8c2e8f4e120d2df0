use thiserror::Error;

/// Errors raised by the word, partition, bijection and polynomial layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letters must be positive integers, found 0")]
    ZeroLetter,

    #[error("cannot parse word {0:?}")]
    ParseWord(String),

    #[error("cannot parse partition {0:?}")]
    ParsePartition(String),

    #[error("cannot parse polynomial {input:?}: {reason}")]
    ParsePoly { input: String, reason: String },

    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("word {0} is not over the alphabet {{1,2}}")]
    NotBinary(String),

    #[error("{0} is not a ballot sequence")]
    NotBallot(String),

    #[error("word {word} is not a rearrangement of 1^{ones} 2^{twos}")]
    WrongContent {
        word: String,
        ones: usize,
        twos: usize,
    },

    #[error("pattern {0} is not a permutation of 1..k")]
    NotPermutation(String),

    #[error("the empty partition has no boundary word")]
    EmptyPartition,

    #[error("infinite family {0} needs an explicit length cap")]
    MissingLengthCap(String),

    #[error("{0}")]
    Domain(String),

    #[error("composition {0:?} violates the defining inequalities")]
    InvalidComposition(Vec<usize>),

    #[error("kappa is not defined at {partition}: {reason}")]
    KappaUndefined { partition: String, reason: String },

    #[error("{0} has no unpaired two")]
    NoUnpairedTwo(String),

    #[error("{0} has no unpaired one")]
    NoUnpairedOne(String),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("cannot substitute into {0}")]
    Substitution(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
