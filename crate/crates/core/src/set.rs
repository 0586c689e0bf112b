//! Canonical finite sets over self-membered individuals.
//!
//! Every set lives in a [`Universe`], an append-only interning table. Composite
//! sets are stored as sorted, duplicate-free member lists and interned, so two
//! ids are equal exactly when the sets they name have the same members. Atoms
//! (individuals) are the only self-membered sets: the member list of an atom
//! `a` is `[a]`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default ceiling on the number of sets a single constructor call may create.
pub const DEFAULT_MAX_SETS: usize = 1 << 20;

/// Dense handle for a set, meaningful only within the universe that issued it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SetId(u32);

impl SetId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(index: usize) -> SetId {
        SetId(u32::try_from(index).expect("universe exceeds u32 ids"))
    }
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetNode {
    /// An individual; its only member is itself.
    Atom { name: String, id: SetId },
    /// A set with a nonempty, sorted, duplicate-free member list.
    Composite { members: Vec<SetId> },
}

impl SetNode {
    pub fn members(&self) -> &[SetId] {
        match self {
            SetNode::Atom { id, .. } => std::slice::from_ref(id),
            SetNode::Composite { members } => members,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, SetNode::Atom { .. })
    }
}

/// The domain all quantifiers range over.
#[derive(Debug, Clone)]
pub struct Universe {
    nodes: Vec<SetNode>,
    ranks: Vec<u32>,
    atoms: Vec<SetId>,
    index: HashMap<Vec<SetId>, SetId>,
    max_sets: usize,
    depth: Option<usize>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Universe {
    /// Creates a universe holding one atom per name, in the given order.
    pub fn new<S: AsRef<str>>(atom_names: &[S]) -> Result<Universe> {
        let mut universe = Universe {
            nodes: Vec::with_capacity(atom_names.len()),
            ranks: Vec::with_capacity(atom_names.len()),
            atoms: Vec::with_capacity(atom_names.len()),
            index: HashMap::new(),
            max_sets: DEFAULT_MAX_SETS,
            depth: None,
        };
        for name in atom_names {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if !is_identifier(name) {
                return Err(Error::InvalidName(name.to_string()));
            }
            if universe.atom_named(name).is_some() {
                return Err(Error::DuplicateAtomName(name.to_string()));
            }
            let id = SetId::from_index(universe.nodes.len());
            universe.nodes.push(SetNode::Atom {
                name: name.to_string(),
                id,
            });
            universe.ranks.push(0);
            universe.atoms.push(id);
        }
        Ok(universe)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// All ids currently in the universe, in interning order.
    pub fn ids(&self) -> impl DoubleEndedIterator<Item = SetId> + ExactSizeIterator {
        (0..self.nodes.len()).map(SetId::from_index)
    }

    pub fn atoms(&self) -> &[SetId] {
        &self.atoms
    }

    pub fn atom_names(&self) -> Vec<&str> {
        self.atoms.iter().map(|&a| self.atom_name(a).unwrap()).collect()
    }

    pub fn atom_named(&self, name: &str) -> Option<SetId> {
        self.atoms
            .iter()
            .copied()
            .find(|&a| self.atom_name(a) == Some(name))
    }

    pub fn atom_name(&self, id: SetId) -> Option<&str> {
        match self.nodes.get(id.index()) {
            Some(SetNode::Atom { name, .. }) => Some(name),
            _ => None,
        }
    }

    pub fn max_sets(&self) -> usize {
        self.max_sets
    }

    pub fn set_max_sets(&mut self, max_sets: usize) {
        self.max_sets = max_sets;
    }

    /// Stage count of the build that produced this universe, if any.
    pub fn depth(&self) -> Option<usize> {
        self.depth
    }

    pub fn set_depth(&mut self, depth: Option<usize>) {
        self.depth = depth;
    }

    pub fn node(&self, id: SetId) -> Result<&SetNode> {
        self.nodes.get(id.index()).ok_or(Error::UnknownId(id))
    }

    pub fn check(&self, id: SetId) -> Result<SetId> {
        self.node(id).map(|_| id)
    }

    /// Interns the set with exactly the given members.
    ///
    /// Duplicates are removed; a collection consisting of one atom `a` yields
    /// `a` itself.
    pub fn intern_set<I>(&mut self, members: I) -> Result<SetId>
    where
        I: IntoIterator<Item = SetId>,
    {
        let mut members: Vec<SetId> = members.into_iter().collect();
        for &m in &members {
            self.check(m)?;
        }
        members.sort_unstable();
        members.dedup();
        self.intern_sorted(members)
    }

    pub(crate) fn intern_sorted(&mut self, members: Vec<SetId>) -> Result<SetId> {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        match members.as_slice() {
            [] => return Err(Error::EmptySetForbidden),
            [only] if self.nodes[only.index()].is_atom() => return Ok(*only),
            _ => {}
        }
        if let Some(&id) = self.index.get(&members) {
            return Ok(id);
        }
        let id = SetId::from_index(self.nodes.len());
        let rank = 1 + members
            .iter()
            .map(|m| self.ranks[m.index()])
            .max()
            .unwrap_or(0);
        self.index.insert(members.clone(), id);
        self.nodes.push(SetNode::Composite { members });
        self.ranks.push(rank);
        Ok(id)
    }

    /// Looks up the set with exactly these members without interning it.
    pub fn find<I>(&self, members: I) -> Option<SetId>
    where
        I: IntoIterator<Item = SetId>,
    {
        let mut members: Vec<SetId> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        match members.as_slice() {
            [] => None,
            [only] if self.nodes.get(only.index())?.is_atom() => Some(*only),
            _ => self.index.get(&members).copied(),
        }
    }

    pub fn members(&self, s: SetId) -> Result<&[SetId]> {
        self.node(s).map(SetNode::members)
    }

    pub(crate) fn members_of(&self, s: SetId) -> &[SetId] {
        self.nodes[s.index()].members()
    }

    pub fn is_member(&self, x: SetId, s: SetId) -> Result<bool> {
        self.check(x)?;
        Ok(self.members(s)?.binary_search(&x).is_ok())
    }

    pub(crate) fn contains(&self, s: SetId, x: SetId) -> bool {
        self.members_of(s).binary_search(&x).is_ok()
    }

    /// True iff `s ∈ s`.
    pub fn is_individual(&self, s: SetId) -> Result<bool> {
        self.is_member(s, s)
    }

    pub fn is_subset(&self, s: SetId, t: SetId) -> Result<bool> {
        self.check(t)?;
        Ok(self.members(s)?.iter().all(|&u| self.contains(t, u)))
    }

    /// True iff every member of `s` is a subset of `s`.
    pub fn is_transitive(&self, s: SetId) -> Result<bool> {
        let members = self.members(s)?;
        Ok(members
            .iter()
            .all(|&u| self.members_of(u).iter().all(|&w| self.contains(s, w))))
    }

    pub fn cardinality(&self, s: SetId) -> Result<usize> {
        self.members(s).map(<[SetId]>::len)
    }

    /// Length of the longest membership chain down to an atom; atoms have rank 0.
    pub fn rank(&self, s: SetId) -> Result<u32> {
        self.check(s).map(|s| self.ranks[s.index()])
    }

    /// Writes `s` as a set literal over atom names, e.g. `{u,v,{u,v}}`.
    pub fn literal(&self, s: SetId) -> Result<String> {
        self.check(s)?;
        let mut out = String::new();
        self.write_literal(s, &mut out);
        Ok(out)
    }

    fn write_literal(&self, s: SetId, out: &mut String) {
        match &self.nodes[s.index()] {
            SetNode::Atom { name, .. } => out.push_str(name),
            SetNode::Composite { members } => {
                out.push('{');
                for (i, &m) in members.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    if m == s {
                        // only reachable through the fixtures backdoor
                        out.push_str("<self>");
                    } else {
                        self.write_literal(m, out);
                    }
                }
                out.push('}');
            }
        }
    }

    /// Appends a composite that contains itself, bypassing every interning rule.
    ///
    /// Such a node violates the individuals axiom; it exists only so negative-control
    /// tests can check that the verifier notices.
    #[cfg(feature = "fixtures")]
    pub fn insert_self_member(&mut self, others: &[SetId]) -> Result<SetId> {
        for &m in others {
            self.check(m)?;
        }
        let id = SetId::from_index(self.nodes.len());
        let mut members = others.to_vec();
        members.push(id);
        members.sort_unstable();
        members.dedup();
        let rank = 1 + others
            .iter()
            .map(|m| self.ranks[m.index()])
            .max()
            .unwrap_or(0);
        self.nodes.push(SetNode::Composite { members });
        self.ranks.push(rank);
        Ok(id)
    }
}
