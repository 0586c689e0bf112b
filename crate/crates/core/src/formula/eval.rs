use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Formula;
use crate::error::{Error, Result};
use crate::set::{SetId, Universe};

/// Variable assignment for the free variables of a formula.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Env {
    bindings: BTreeMap<String, SetId>,
}

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    pub fn bind(mut self, var: impl Into<String>, value: SetId) -> Env {
        self.bindings.insert(var.into(), value);
        self
    }

    pub fn insert(&mut self, var: impl Into<String>, value: SetId) {
        self.bindings.insert(var.into(), value);
    }

    pub fn get(&self, var: &str) -> Option<SetId> {
        self.bindings.get(var).copied()
    }
}

impl<S: Into<String>> FromIterator<(S, SetId)> for Env {
    fn from_iter<I: IntoIterator<Item = (S, SetId)>>(iter: I) -> Env {
        Env {
            bindings: iter.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Definiteness {
    Tautological,
    Contradictory,
    Contingent,
}

/// A formula with every variable resolved to a slot of the evaluation stack.
enum Node {
    Member(usize, usize),
    Equal(usize, usize),
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Implies(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
    Forall(Box<Node>),
    Exists(Box<Node>),
}

fn compile<'a>(f: &'a Formula, scope: &mut Vec<&'a str>) -> Result<Node> {
    let slot = |scope: &Vec<&str>, v: &str| {
        scope
            .iter()
            .rposition(|&name| name == v)
            .ok_or_else(|| Error::UnboundVariable(v.to_string()))
    };
    let binary = |p, q, scope: &mut Vec<&'a str>| -> Result<(Box<Node>, Box<Node>)> {
        Ok((Box::new(compile(p, scope)?), Box::new(compile(q, scope)?)))
    };
    Ok(match f {
        Formula::Member(x, s) => Node::Member(slot(scope, x)?, slot(scope, s)?),
        Formula::Equal(x, y) => Node::Equal(slot(scope, x)?, slot(scope, y)?),
        Formula::Not(g) => Node::Not(Box::new(compile(g, scope)?)),
        Formula::And(p, q) => {
            let (p, q) = binary(p, q, scope)?;
            Node::And(p, q)
        }
        Formula::Or(p, q) => {
            let (p, q) = binary(p, q, scope)?;
            Node::Or(p, q)
        }
        Formula::Implies(p, q) => {
            let (p, q) = binary(p, q, scope)?;
            Node::Implies(p, q)
        }
        Formula::Iff(p, q) => {
            let (p, q) = binary(p, q, scope)?;
            Node::Iff(p, q)
        }
        Formula::Forall(x, body) | Formula::Exists(x, body) => {
            scope.push(x);
            let body = compile(body, scope);
            scope.pop();
            let body = Box::new(body?);
            if matches!(f, Formula::Forall(..)) {
                Node::Forall(body)
            } else {
                Node::Exists(body)
            }
        }
    })
}

fn eval(universe: &Universe, node: &Node, stack: &mut Vec<SetId>) -> bool {
    match node {
        Node::Member(x, s) => universe.contains(stack[*s], stack[*x]),
        Node::Equal(x, y) => stack[*x] == stack[*y],
        Node::Not(f) => !eval(universe, f, stack),
        Node::And(p, q) => eval(universe, p, stack) && eval(universe, q, stack),
        Node::Or(p, q) => eval(universe, p, stack) || eval(universe, q, stack),
        Node::Implies(p, q) => !eval(universe, p, stack) || eval(universe, q, stack),
        Node::Iff(p, q) => eval(universe, p, stack) == eval(universe, q, stack),
        Node::Forall(body) => quantify(universe, body, stack, true),
        Node::Exists(body) => quantify(universe, body, stack, false),
    }
}

fn quantify(universe: &Universe, body: &Node, stack: &mut Vec<SetId>, universal: bool) -> bool {
    stack.push(SetId::from_index(0));
    let top = stack.len() - 1;
    let mut result = universal;
    for id in universe.ids() {
        stack[top] = id;
        if eval(universe, body, stack) != universal {
            result = !universal;
            break;
        }
    }
    stack.pop();
    result
}

/// Evaluates `f` classically, with quantifiers ranging over every set in `universe`.
pub fn evaluate(universe: &Universe, f: &Formula, env: &Env) -> Result<bool> {
    let mut scope = Vec::new();
    let mut stack = Vec::new();
    for (name, &id) in &env.bindings {
        universe.check(id)?;
        scope.push(name.as_str());
        stack.push(id);
    }
    let node = compile(f, &mut scope)?;
    Ok(eval(universe, &node, &mut stack))
}

/// Evaluates a one-variable criterion at every set in `universe`.
pub fn classify(universe: &Universe, f: &Formula, var: &str) -> Result<Definiteness> {
    check_arity(f, var)?;
    let node = compile(f, &mut vec![var])?;
    let mut stack = vec![SetId::from_index(0)];
    let (mut any_true, mut any_false) = (false, false);
    for id in universe.ids() {
        stack[0] = id;
        if eval(universe, &node, &mut stack) {
            any_true = true;
        } else {
            any_false = true;
        }
        if any_true && any_false {
            return Ok(Definiteness::Contingent);
        }
    }
    Ok(if any_true {
        Definiteness::Tautological
    } else {
        // an empty universe has nothing that satisfies the criterion
        Definiteness::Contradictory
    })
}

pub(crate) fn check_arity(f: &Formula, var: &str) -> Result<()> {
    let free = f.free_vars();
    if free.len() == 1 && free.contains(var) {
        Ok(())
    } else {
        Err(Error::WrongArity {
            expected: var.to_string(),
            found: free.into_iter().collect(),
        })
    }
}

/// A criterion compiled once and evaluated at many points.
pub(crate) struct Criterion {
    node: Node,
}

impl Criterion {
    pub(crate) fn new(f: &Formula, var: &str) -> Result<Criterion> {
        check_arity(f, var)?;
        Ok(Criterion {
            node: compile(f, &mut vec![var])?,
        })
    }

    pub(crate) fn holds_at(&self, universe: &Universe, x: SetId) -> bool {
        eval(universe, &self.node, &mut vec![x])
    }
}
