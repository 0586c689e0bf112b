//! Pairing, union, powerset and specification as constructors that intern
//! their results into the universe.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::eval::Criterion;
use crate::formula::{classify, Definiteness, Formula};
use crate::set::{SetId, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NoSetReason {
    /// No member of the source set satisfies the criterion.
    NoWitness,
    /// The criterion is false for every set in the universe.
    ContradictoryCriterion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecifyOutcome {
    Specified(SetId),
    NoSet(NoSetReason),
}

impl SpecifyOutcome {
    pub fn specified(self) -> Option<SetId> {
        match self {
            SpecifyOutcome::Specified(id) => Some(id),
            SpecifyOutcome::NoSet(_) => None,
        }
    }
}

pub fn pair(universe: &mut Universe, s: SetId, t: SetId) -> Result<SetId> {
    universe.intern_set([s, t])
}

/// `{s}`; the singleton of an atom is the atom.
pub fn singleton(universe: &mut Universe, s: SetId) -> Result<SetId> {
    universe.intern_set([s])
}

/// `⋃s`, the set of members of members of `s`.
pub fn union_all(universe: &mut Universe, s: SetId) -> Result<SetId> {
    let mut members = Vec::new();
    for &t in universe.members(s)? {
        members.extend_from_slice(universe.members_of(t));
    }
    universe.intern_set(members)
}

pub fn binary_union(universe: &mut Universe, s: SetId, t: SetId) -> Result<SetId> {
    let p = pair(universe, s, t)?;
    union_all(universe, p)
}

/// The set of all nonempty subsets of `s`.
///
/// Fails with [`Error::CapExceeded`] (stage 0) when `2^|s| - 1` exceeds the
/// universe's `max_sets`.
pub fn powerset(universe: &mut Universe, s: SetId) -> Result<SetId> {
    let members = universe.members(s)?.to_vec();
    let n = members.len();
    let within_cap = n < 64 && (1u128 << n) - 1 <= universe.max_sets() as u128;
    if !within_cap {
        return Err(Error::CapExceeded {
            stage: 0,
            domain: n,
            cap: universe.max_sets(),
        });
    }
    let mut subsets = Vec::with_capacity((1usize << n) - 1);
    for mask in 1u64..(1u64 << n) {
        let subset: Vec<SetId> = members
            .iter()
            .enumerate()
            .filter(|&(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        subsets.push(universe.intern_sorted(subset)?);
    }
    universe.intern_set(subsets)
}

/// `{u ∈ s : f(u)}`, or the reason no such set exists.
pub fn specify(universe: &mut Universe, s: SetId, f: &Formula, var: &str) -> Result<SpecifyOutcome> {
    let criterion = Criterion::new(f, var)?;
    let members = universe.members(s)?;
    if classify(universe, f, var)? == Definiteness::Contradictory {
        return Ok(SpecifyOutcome::NoSet(NoSetReason::ContradictoryCriterion));
    }
    let selected: Vec<SetId> = members
        .iter()
        .copied()
        .filter(|&u| criterion.holds_at(universe, u))
        .collect();
    if selected.is_empty() {
        return Ok(SpecifyOutcome::NoSet(NoSetReason::NoWitness));
    }
    universe.intern_sorted(selected).map(SpecifyOutcome::Specified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn setup() -> (Universe, SetId, SetId, SetId) {
        let mut un = Universe::new(&["u", "v"]).unwrap();
        let (u, v) = (un.atoms()[0], un.atoms()[1]);
        let p = un.intern_set([u, v]).unwrap();
        (un, u, v, p)
    }

    #[test]
    fn pairs_and_singletons() {
        let (mut un, u, v, p) = setup();
        assert_eq!(pair(&mut un, u, v).unwrap(), p);
        assert_eq!(pair(&mut un, v, u).unwrap(), p);
        assert!(!un.is_individual(p).unwrap());
        assert_eq!(pair(&mut un, u, u).unwrap(), u);
        assert_eq!(singleton(&mut un, u).unwrap(), u);
        let sp = singleton(&mut un, p).unwrap();
        assert_ne!(sp, p);
        assert_eq!(pair(&mut un, p, p).unwrap(), sp);
        assert!(!un.is_member(sp, sp).unwrap());
        let su = singleton(&mut un, u).unwrap();
        assert_eq!(singleton(&mut un, su).unwrap(), u);
        assert!(pair(&mut un, u, SetId::from_index(50)).is_err());
    }

    #[test]
    fn unions() {
        let (mut un, u, v, p) = setup();
        assert_eq!(union_all(&mut un, p).unwrap(), p);
        assert_eq!(union_all(&mut un, u).unwrap(), u);
        let succ = un.intern_set([u, v, p]).unwrap();
        assert_eq!(union_all(&mut un, succ).unwrap(), p);
        assert_eq!(binary_union(&mut un, p, p).unwrap(), p);
        assert_eq!(binary_union(&mut un, u, v).unwrap(), p);
        let sp = singleton(&mut un, p).unwrap();
        assert_eq!(binary_union(&mut un, p, sp).unwrap(), succ);
    }

    #[test]
    fn powersets() {
        let (mut un, u, _v, p) = setup();
        assert_eq!(powerset(&mut un, u).unwrap(), u);
        let sp = singleton(&mut un, p).unwrap();
        let ssp = singleton(&mut un, sp).unwrap();
        assert_eq!(powerset(&mut un, sp).unwrap(), ssp);
        let pp = powerset(&mut un, p).unwrap();
        assert_eq!(un.cardinality(pp).unwrap(), 3);
        assert!(un.is_member(p, pp).unwrap());
    }

    #[test]
    fn powerset_cap() {
        let (mut un, ..) = setup();
        let mut big = Universe::new(&["a", "b", "c", "d"]).unwrap();
        big.set_max_sets(14);
        let all = big.intern_set(big.atoms().to_vec()).unwrap();
        assert!(matches!(
            powerset(&mut big, all),
            Err(Error::CapExceeded { domain: 4, cap: 14, .. })
        ));
        big.set_max_sets(15);
        assert!(powerset(&mut big, all).is_ok());
        un.set_max_sets(0);
        assert!(powerset(&mut un, SetId::from_index(0)).is_err());
    }

    #[test]
    fn specification() {
        let (mut un, u, v, p) = setup();
        let s = un.intern_set([u, v, p]).unwrap();
        let not_self = parse("x notin x").unwrap();
        let self_member = parse("x in x").unwrap();
        let out = specify(&mut un, s, &not_self, "x").unwrap();
        let sp = un.find([p]).unwrap();
        assert_eq!(out, SpecifyOutcome::Specified(sp));
        assert!(!un.is_member(sp, s).unwrap());
        assert!(un.is_subset(sp, s).unwrap());

        assert_eq!(
            specify(&mut un, p, &not_self, "x").unwrap(),
            SpecifyOutcome::NoSet(NoSetReason::NoWitness)
        );
        let q = un.intern_set([u, p]).unwrap();
        assert_eq!(
            specify(&mut un, q, &self_member, "x").unwrap(),
            SpecifyOutcome::Specified(u)
        );
        let contradiction = parse("x in x & x notin x").unwrap();
        assert_eq!(
            specify(&mut un, s, &contradiction, "x").unwrap(),
            SpecifyOutcome::NoSet(NoSetReason::ContradictoryCriterion)
        );
        assert!(matches!(
            specify(&mut un, s, &parse("x in y").unwrap(), "x"),
            Err(Error::WrongArity { .. })
        ));
    }
}
