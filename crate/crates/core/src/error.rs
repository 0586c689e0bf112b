use thiserror::Error;

use crate::set::SetId;

/// Errors raised by universe construction and the set operations built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate atom name `{0}`")]
    DuplicateAtomName(String),
    #[error("atom names must be nonempty")]
    EmptyName,
    #[error("invalid atom name `{0}`: expected a letter followed by letters, digits or `_`")]
    InvalidName(String),
    #[error("a set without any member does not exist")]
    EmptySetForbidden,
    #[error("unknown set id {0}")]
    UnknownId(SetId),
    #[error("stage {stage} requires 2^{domain} - 1 sets, cap is {cap}")]
    CapExceeded {
        stage: usize,
        domain: usize,
        cap: usize,
    },
    #[error("invalid build config: {0}")]
    InvalidConfig(String),
    #[error("set {0} is not an atom")]
    NotAtom(SetId),
    #[error("base atoms must be distinct")]
    AtomsEqual,
    #[error("sequence length must be at least 1")]
    InvalidLength,
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("this check needs a pair of distinct atoms")]
    MissingAtomPair,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("criterion must have exactly one free variable `{expected}`, found {{{}}}", found.join(", "))]
    WrongArity {
        expected: String,
        found: Vec<String>,
    },
}

impl Error {
    /// Number of sets a [`Error::CapExceeded`] stage would have needed, if it fits in a `u128`.
    pub fn required_sets(&self) -> Option<u128> {
        match self {
            Error::CapExceeded { domain, .. } => 1u128.checked_shl(*domain as u32).map(|p| p - 1),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
