//! Number sequences `b, b ∪ {b}, ...` started from a pair of distinct atoms.

use serde::{Deserialize, Serialize};

use crate::constructors::{binary_union, pair, singleton};
use crate::error::{Error, Result};
use crate::set::{SetId, Universe};
use crate::verifier::{
    deeply_transitive, is_deeply_transitive, Claim, Instance, Report, Scan, UniverseSummary,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberSequence {
    pub base: SetId,
    pub elements: Vec<SetId>,
}

/// `s ∪ {s}`. Atoms are fixed points.
pub fn successor(universe: &mut Universe, s: SetId) -> Result<SetId> {
    let single = singleton(universe, s)?;
    binary_union(universe, s, single)
}

/// Sorted members of `s ∪ {s}`, computed without interning.
fn successor_members(universe: &Universe, s: SetId) -> Vec<SetId> {
    let mut members = universe.members_of(s).to_vec();
    if let Err(at) = members.binary_search(&s) {
        members.insert(at, s);
    }
    members
}

pub fn sequence(universe: &mut Universe, a1: SetId, a2: SetId, n: usize) -> Result<NumberSequence> {
    for a in [a1, a2] {
        if !universe.node(a)?.is_atom() {
            return Err(Error::NotAtom(a));
        }
    }
    if a1 == a2 {
        return Err(Error::AtomsEqual);
    }
    if n == 0 {
        return Err(Error::InvalidLength);
    }
    let base = pair(universe, a1, a2)?;
    let mut elements = Vec::with_capacity(n);
    elements.push(base);
    while elements.len() < n {
        let next = successor(universe, *elements.last().unwrap())?;
        elements.push(next);
    }
    Ok(NumberSequence { base, elements })
}

fn validate(universe: &Universe, seq: &NumberSequence) -> Result<()> {
    let malformed = |msg: &str| Err(Error::MalformedSequence(msg.to_string()));
    for &e in seq.elements.iter().chain([&seq.base]) {
        universe.check(e)?;
    }
    if seq.elements.first() != Some(&seq.base) {
        return malformed("the first element must be the base");
    }
    match universe.members_of(seq.base) {
        [a, b] if universe.node(*a)?.is_atom() && universe.node(*b)?.is_atom() => Ok(()),
        _ => malformed("the base must be a pair of distinct atoms"),
    }
}

/// The Peano checks of `seq` as scans; see [`check_peano`].
pub fn peano_scans(universe: &Universe, seq: &NumberSequence) -> Result<Vec<Scan>> {
    validate(universe, seq)?;
    let elems = &seq.elements;
    let base = seq.base;
    let consecutive: Vec<Vec<SetId>> = elems.windows(2).map(|w| vec![w[0], w[1]]).collect();
    let all_pairs: Vec<Vec<SetId>> = elems
        .iter()
        .flat_map(|&x| elems.iter().map(move |&y| vec![x, y]))
        .collect();
    let distinct_pairs: Vec<Vec<SetId>> = (0..elems.len())
        .flat_map(|i| (i + 1..elems.len()).map(move |j| vec![elems[i], elems[j]]))
        .collect();
    let with_base: Vec<Vec<SetId>> = elems.iter().map(|&x| vec![base, x]).collect();
    let singles: Vec<Vec<SetId>> = elems.iter().map(|&x| vec![x]).collect();

    let mut scans = Vec::new();
    scans.push(Scan::run(
        Claim::new("P1-base", &["b", "n"], None, "b = n"),
        vec![vec![base, elems[0]]],
        |t| Instance::from_bool(t[0] == t[1]),
    ));
    scans.push(Scan::run(
        Claim::new(
            "P2-successor",
            &["n", "m"],
            None,
            "forall x. (x in m <-> (x in n | x = n))",
        ),
        consecutive.clone(),
        |t| Instance::from_bool(universe.members_of(t[1]) == successor_members(universe, t[0])),
    ));
    scans.push(Scan::run(
        Claim::new(
            "P3-injective",
            &["x", "y"],
            Some("forall z. ((z in x | z = x) <-> (z in y | z = y))"),
            "x = y",
        ),
        all_pairs,
        |t| {
            if successor_members(universe, t[0]) != successor_members(universe, t[1]) {
                return Instance::Skip;
            }
            Instance::from_bool(t[0] == t[1])
        },
    ));
    scans.push(Scan::run(
        Claim::new(
            "P4-base-not-successor",
            &["b", "x"],
            None,
            "!(forall z. (z in b <-> (z in x | z = x)))",
        ),
        with_base,
        |t| {
            let succ = successor_members(universe, t[1]);
            Instance::from_bool(universe.members_of(t[0]) != succ.as_slice())
        },
    ));
    scans.push(Scan::run(
        Claim::new("P5-distinct", &["x", "y"], None, "x != y"),
        distinct_pairs,
        |t| Instance::from_bool(t[0] != t[1]),
    ));
    scans.push(Scan::run(
        Claim::new(
            "transitive-members",
            &["x"],
            None,
            &format!("x notin x & {}", deeply_transitive("x", "y", "z", "q")),
        ),
        singles,
        |t| {
            let x = t[0];
            Instance::from_bool(!universe.contains(x, x) && is_deeply_transitive(universe, x))
        },
    ));
    scans.push(Scan::run(
        Claim::new(
            "union-inverse",
            &["n", "m"],
            None,
            "forall z. (z in n <-> exists t. (t in m & z in t))",
        ),
        consecutive,
        |t| {
            let mut union: Vec<SetId> = universe
                .members_of(t[1])
                .iter()
                .flat_map(|&m| universe.members_of(m).iter().copied())
                .collect();
            union.sort_unstable();
            union.dedup();
            Instance::from_bool(universe.members_of(t[0]) == union.as_slice())
        },
    ));
    Ok(scans)
}

/// Checks the Peano properties of `seq`: the base starts it, each element's
/// successor is the next element, successor is injective on it, the base is
/// no element's successor, and elements are pairwise distinct. Also checks
/// that elements are transitive with transitive members and that `⋃` undoes
/// each successor step.
pub fn check_peano(universe: &Universe, seq: &NumberSequence) -> Result<Report> {
    Ok(Report {
        universe: UniverseSummary::of(universe),
        results: peano_scans(universe, seq)?.iter().map(Scan::result).collect(),
    })
}

/// Whether two sequences share any element past their bases.
pub fn overlap_scan(first: &NumberSequence, second: &NumberSequence) -> Scan {
    let tuples = first
        .elements
        .iter()
        .skip(1)
        .flat_map(|&x| second.elements.iter().skip(1).map(move |&y| vec![x, y]))
        .collect();
    Scan::run(
        Claim::new("sequences-disjoint", &["x", "y"], None, "x != y"),
        tuples,
        |t| Instance::from_bool(t[0] != t[1]),
    )
}
