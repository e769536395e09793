use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("malformed exponent in `{0}` (expected a nonzero integer)")]
    MalformedExponent(String),
    #[error("`{0}` is reserved and cannot be used as a letter")]
    ReservedSymbol(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid letter name `{0}`")]
    InvalidLetterName(String),
    #[error("letter `{0}` declared twice")]
    DuplicateLetter(String),
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("the variable `{0}` must not belong to the alphabet")]
    VariableInAlphabet(String),
    #[error("the identity has no primitive root")]
    IdentityHasNoRoot,
    #[error("element must be nontrivial")]
    TrivialElement,
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("centralizer of identity is the whole group")]
    WholeGroup,
    #[error("coset root must be nontrivial")]
    TrivialRoot,
    #[error(
        "root is a proper power (exponent {exponent} of a primitive word); cosets must be cosets \
         of centralizers, which are maximal cyclic subgroups with a primitive generator"
    )]
    NonPrimitiveRoot { exponent: u64 },
    #[error("word uses letter index {letter} outside an alphabet of size {rank}")]
    AlphabetMismatch { letter: u32, rank: usize },
    #[error("target alphabet too small: {needed} fresh letters needed, {available} available")]
    TargetTooSmall { needed: usize, available: usize },
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("discovery produced {lines} coset hypotheses (limit {limit}); use a smaller radius")]
    OversizeDiscovery { lines: usize, limit: usize },
    #[error(
        "solution set still disagrees with enumeration after {escalations} escalations \
         ({missing} missing, {extra} extra at radius {radius})"
    )]
    EscalationExhausted {
        escalations: u32,
        radius: usize,
        missing: usize,
        extra: usize,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed JSON set: {0}")]
    Json(String),
}
