//! First-order formulas over a [`Universe`](crate::set::Universe): membership and
//! equality atoms, the classical connectives, and quantifiers ranging over
//! every set in the universe.

pub(crate) mod eval;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

pub use eval::{classify, evaluate, Definiteness, Env};
pub use parse::{parse, ParseError, ParseErrorKind, KEYWORDS};

pub type Var = String;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Member(Var, Var),
    Equal(Var, Var),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

impl Formula {
    pub fn member(x: impl Into<Var>, s: impl Into<Var>) -> Formula {
        Formula::Member(x.into(), s.into())
    }

    pub fn equal(x: impl Into<Var>, y: impl Into<Var>) -> Formula {
        Formula::Equal(x.into(), y.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(p: Formula, q: Formula) -> Formula {
        Formula::And(Box::new(p), Box::new(q))
    }

    pub fn or(p: Formula, q: Formula) -> Formula {
        Formula::Or(Box::new(p), Box::new(q))
    }

    pub fn implies(p: Formula, q: Formula) -> Formula {
        Formula::Implies(Box::new(p), Box::new(q))
    }

    pub fn iff(p: Formula, q: Formula) -> Formula {
        Formula::Iff(Box::new(p), Box::new(q))
    }

    pub fn forall(x: impl Into<Var>, f: Formula) -> Formula {
        Formula::Forall(x.into(), Box::new(f))
    }

    pub fn exists(x: impl Into<Var>, f: Formula) -> Formula {
        Formula::Exists(x.into(), Box::new(f))
    }

    /// Variables with at least one occurrence not bound by an enclosing quantifier.
    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut free = BTreeSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut free);
        free
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, free: &mut BTreeSet<Var>) {
        match self {
            Formula::Member(x, y) | Formula::Equal(x, y) => {
                for v in [x, y] {
                    if !bound.contains(&v.as_str()) {
                        free.insert(v.clone());
                    }
                }
            }
            Formula::Not(f) => f.collect_free(bound, free),
            Formula::And(p, q)
            | Formula::Or(p, q)
            | Formula::Implies(p, q)
            | Formula::Iff(p, q) => {
                p.collect_free(bound, free);
                q.collect_free(bound, free);
            }
            Formula::Forall(x, f) | Formula::Exists(x, f) => {
                bound.push(x);
                f.collect_free(bound, free);
                bound.pop();
            }
        }
    }
}

/// Canonical, fully parenthesized rendering; `parse` reads it back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Member(x, s) => write!(f, "({x} in {s})"),
            Formula::Equal(x, y) => write!(f, "({x} = {y})"),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Member(x, s) => write!(f, "({x} notin {s})"),
                Formula::Equal(x, y) => write!(f, "({x} != {y})"),
                other => write!(f, "(!{other})"),
            },
            Formula::And(p, q) => write!(f, "({p} & {q})"),
            Formula::Or(p, q) => write!(f, "({p} | {q})"),
            Formula::Implies(p, q) => write!(f, "({p} -> {q})"),
            Formula::Iff(p, q) => write!(f, "({p} <-> {q})"),
            Formula::Forall(x, body) => write!(f, "(forall {x}. {body})"),
            Formula::Exists(x, body) => write!(f, "(exists {x}. {body})"),
        }
    }
}

pub fn print(f: &Formula) -> String {
    f.to_string()
}
