//! Hereditarily finite sets over self-membered individuals, with exhaustive
//! checking of set-theoretic claims over enumerated finite universes.
//!
//! An individual (atom) is a set whose only member is itself. There is no
//! empty set, the singleton of an atom is the atom, and equal sets share one
//! interned [`SetId`].

pub mod builder;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod formula;
pub mod peano;
pub mod set;
pub mod verifier;

pub use builder::{build, BuildConfig, StageReport};
pub use constructors::{
    binary_union, pair, powerset, singleton, specify, union_all, NoSetReason, SpecifyOutcome,
};
pub use error::{Error, Result};
pub use formula::{classify, evaluate, parse, Definiteness, Env, Formula};
pub use peano::{check_peano, sequence, successor, NumberSequence};
pub use set::{SetId, SetNode, Universe};
pub use verifier::{CheckResult, Report, Status};
