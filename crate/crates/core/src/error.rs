use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown letter '{letter}' at offset {offset}")]
    UnknownLetter { letter: char, offset: usize },

    #[error("malformed exponent at offset {offset}: {reason}")]
    MalformedExponent { offset: usize, reason: String },

    #[error("syntax error at offset {offset}: {reason}")]
    Syntax { offset: usize, reason: String },

    #[error("word length exceeds the cap of {cap} letters")]
    WordTooLong { cap: usize },

    #[error("letter index {index} is out of range for alphabet '{alphabet}'")]
    LetterOutOfRange { index: usize, alphabet: String },

    #[error("alphabet mismatch: '{left}' vs '{right}'")]
    AlphabetMismatch { left: String, right: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph would have {requested} vertices, exceeding the cap of {cap}")]
    GraphTooLarge { requested: usize, cap: usize },

    #[error(
        "pullback exceeds the cap of {cap} vertices (factor graphs have {left} and {right} vertices)"
    )]
    PullbackTooLarge { cap: usize, left: usize, right: usize },

    #[error(
        "invalid family parameters m={m}, n={n}, k={k}, l={l}: require m ≥ 2, n ≥ 2, 0 ≤ k ≤ m−2, 0 ≤ ℓ ≤ n−1"
    )]
    InvalidFamily { m: i64, n: i64, k: i64, l: i64 },

    #[error("invalid rank parameter {name}={value}: must be at least 2")]
    RankTooSmall { name: &'static str, value: i64 },

    #[error("target rank {target} is out of range [0, {max}] for m={m}, n={n}")]
    TargetRankOutOfRange { m: usize, n: usize, target: i64, max: usize },

    #[error("the {0} subgroup is trivial")]
    TrivialSubgroup(&'static str),
}
