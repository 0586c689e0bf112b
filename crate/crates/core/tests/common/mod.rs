//! Helpers shared by the integration test targets.
//!
//! `Hf` is an independent structural model of the sets: an atom, or a
//! `BTreeSet` of trees, normalized so the one-element set of an atom is the
//! atom. Nothing is shared with the library except final comparisons.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use quine_sets::{Formula, SetId, Universe};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Hf {
    Atom(String),
    Set(BTreeSet<Hf>),
}

impl Hf {
    pub fn set(members: BTreeSet<Hf>) -> Hf {
        assert!(!members.is_empty());
        if members.len() == 1 {
            if let Some(Hf::Atom(a)) = members.iter().next() {
                return Hf::Atom(a.clone());
            }
        }
        Hf::Set(members)
    }

    pub fn members(&self) -> BTreeSet<Hf> {
        match self {
            Hf::Atom(_) => [self.clone()].into(),
            Hf::Set(m) => m.clone(),
        }
    }

    pub fn literal(&self, order: &dyn Fn(&Hf) -> usize) -> String {
        match self {
            Hf::Atom(a) => a.clone(),
            Hf::Set(m) => {
                let mut parts: Vec<&Hf> = m.iter().collect();
                parts.sort_by_key(|h| order(h));
                let inner: Vec<String> = parts.iter().map(|h| h.literal(order)).collect();
                format!("{{{}}}", inner.join(","))
            }
        }
    }
}

pub fn nonempty_subsets(domain: &[Hf]) -> Vec<BTreeSet<Hf>> {
    let mut out = Vec::new();
    for mask in 1u64..(1 << domain.len()) {
        out.push(
            domain
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, h)| h.clone())
                .collect(),
        );
    }
    out
}

/// Cumulative stage sizes by brute-force subset enumeration.
pub fn oracle_stage_counts(atoms: &[&str], depth: usize) -> (Vec<usize>, BTreeSet<Hf>) {
    let mut domain: BTreeSet<Hf> = atoms.iter().map(|a| Hf::Atom(a.to_string())).collect();
    let mut counts = vec![domain.len()];
    for _ in 0..depth {
        let current: Vec<Hf> = domain.iter().cloned().collect();
        for subset in nonempty_subsets(&current) {
            domain.insert(Hf::set(subset));
        }
        counts.push(domain.len());
    }
    (counts, domain)
}

pub fn to_hf(universe: &Universe, id: SetId) -> Hf {
    if let Some(name) = universe.atom_name(id) {
        return Hf::Atom(name.to_string());
    }
    Hf::set(
        universe
            .members(id)
            .unwrap()
            .iter()
            .map(|&m| to_hf(universe, m))
            .collect(),
    )
}

/// Identifiers that are not keywords.
pub fn ident() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,4}".prop_filter("keyword", |s| !quine_sets::formula::KEYWORDS.contains(&s.as_str()))
}

/// Random ASTs with variables drawn from `var`.
pub fn formula_over(var: BoxedStrategy<String>) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        (var.clone(), var.clone()).prop_map(|(x, s)| Formula::member(x, s)),
        (var.clone(), var.clone()).prop_map(|(x, y)| Formula::equal(x, y)),
    ];
    leaf.prop_recursive(5, 40, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Formula::and(p, q)),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Formula::or(p, q)),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Formula::implies(p, q)),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Formula::iff(p, q)),
            (var.clone(), inner.clone()).prop_map(|(x, f)| Formula::forall(x, f)),
            (var.clone(), inner).prop_map(|(x, f)| Formula::exists(x, f)),
        ]
    })
}
