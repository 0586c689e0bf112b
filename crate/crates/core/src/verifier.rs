//! Exhaustive checks of the axioms and theorems over a built universe.
//!
//! Each check is a [`Claim`]: a premise and conclusion over a few variables,
//! scanned over every tuple of sets in the universe as it was when the check
//! started. The scan computes each instance directly from the set
//! representation; [`Scan::formula_outcomes`] re-derives every instance by
//! evaluating the claim's formula, which gives a second, independent path.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructors::{binary_union, pair, singleton, specify, union_all, SpecifyOutcome};
use crate::error::{Error, Result};
use crate::formula::{evaluate, parse, Env, Formula};
use crate::set::{SetId, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "FAILS",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vars: Vec<String>,
    pub ids: Vec<SetId>,
    /// The instance formula; false under the bindings `vars[i] = ids[i]`.
    pub formula: String,
}

impl Witness {
    pub fn env(&self) -> Env {
        self.vars.iter().cloned().zip(self.ids.iter().copied()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub scanned: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseSummary {
    pub atoms: Vec<String>,
    pub size: usize,
    pub depth: Option<usize>,
}

impl UniverseSummary {
    pub fn of(universe: &Universe) -> UniverseSummary {
        UniverseSummary {
            atoms: universe.atom_names().into_iter().map(String::from).collect(),
            size: universe.len(),
            depth: universe.depth(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub universe: UniverseSummary,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fails)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

/// Outcome of a single instance of a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instance {
    /// The premise does not hold.
    Skip,
    Holds,
    Fails,
}

impl Instance {
    pub(crate) fn from_bool(b: bool) -> Instance {
        if b {
            Instance::Holds
        } else {
            Instance::Fails
        }
    }
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub name: &'static str,
    pub vars: Vec<&'static str>,
    pub premise: Option<Formula>,
    pub conclusion: Formula,
    /// Reported when no instance satisfies the premise.
    pub vacuous: Status,
}

impl Claim {
    pub(crate) fn new(name: &'static str, vars: &[&'static str], premise: Option<&str>, conclusion: &str) -> Claim {
        let parse_claim = |text: &str| {
            parse(text).unwrap_or_else(|e| panic!("claim `{name}` does not parse: {e}"))
        };
        Claim {
            name,
            vars: vars.to_vec(),
            premise: premise.map(parse_claim),
            conclusion: parse_claim(conclusion),
            vacuous: Status::Holds,
        }
    }

    pub(crate) fn vacuous(mut self, status: Status) -> Claim {
        self.vacuous = status;
        self
    }

    pub fn formula(&self) -> Formula {
        match &self.premise {
            Some(p) => Formula::implies(p.clone(), self.conclusion.clone()),
            None => self.conclusion.clone(),
        }
    }
}

/// A claim together with the tuples it was checked at and the direct outcome of each.
#[derive(Debug, Clone)]
pub struct Scan {
    pub claim: Claim,
    pub tuples: Vec<Vec<SetId>>,
    pub outcomes: Vec<Instance>,
}

impl Scan {
    pub(crate) fn run<F>(claim: Claim, tuples: Vec<Vec<SetId>>, mut direct: F) -> Scan
    where
        F: FnMut(&[SetId]) -> Instance,
    {
        debug_assert!(tuples.iter().all(|t| t.len() == claim.vars.len()));
        let outcomes = tuples.iter().map(|t| direct(t)).collect();
        Scan {
            claim,
            tuples,
            outcomes,
        }
    }

    pub fn result(&self) -> CheckResult {
        let scanned = self.outcomes.iter().filter(|&&o| o != Instance::Skip).count();
        let failure = self.outcomes.iter().position(|&o| o == Instance::Fails);
        let status = match failure {
            Some(_) => Status::Fails,
            None if scanned > 0 => Status::Holds,
            None => self.claim.vacuous,
        };
        CheckResult {
            name: self.claim.name.to_string(),
            status,
            scanned,
            witness: failure.map(|i| Witness {
                vars: self.claim.vars.iter().map(|v| v.to_string()).collect(),
                ids: self.tuples[i].clone(),
                formula: self.claim.formula().to_string(),
            }),
        }
    }

    /// Outcome of every tuple computed by evaluating the claim's formulas.
    pub fn formula_outcomes(&self, universe: &Universe) -> Result<Vec<Instance>> {
        self.tuples
            .iter()
            .map(|tuple| {
                let env: Env = self.claim.vars.iter().copied().zip(tuple.iter().copied()).collect();
                if let Some(premise) = &self.claim.premise {
                    if !evaluate(universe, premise, &env)? {
                        return Ok(Instance::Skip);
                    }
                }
                evaluate(universe, &self.claim.conclusion, &env).map(Instance::from_bool)
            })
            .collect()
    }

    /// Indices of tuples where the direct and formula outcomes differ.
    pub fn disagreements(&self, universe: &Universe) -> Result<Vec<usize>> {
        let via_formula = self.formula_outcomes(universe)?;
        Ok(self
            .outcomes
            .iter()
            .zip(&via_formula)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i)
            .collect())
    }
}

// Formula text for shared predicates. Variable names are chosen per call so the
// helper never captures a variable of the enclosing claim.

pub(crate) fn transitive(x: &str, y: &str, z: &str) -> String {
    format!("(forall {y}. ({y} in {x} -> forall {z}. ({z} in {y} -> {z} in {x})))")
}

/// `x` is transitive and so is every member of `x`.
pub(crate) fn deeply_transitive(x: &str, y: &str, z: &str, q: &str) -> String {
    format!(
        "({} & forall {y}. ({y} in {x} -> {}))",
        transitive(x, y, z),
        transitive(y, z, q)
    )
}

pub(crate) fn is_deeply_transitive(universe: &Universe, s: SetId) -> bool {
    universe.is_transitive(s).unwrap_or(false)
        && universe
            .members_of(s)
            .iter()
            .all(|&m| universe.is_transitive(m).unwrap_or(false))
}

fn domain(universe: &Universe) -> Vec<SetId> {
    universe.ids().collect()
}

fn singles(ids: &[SetId]) -> Vec<Vec<SetId>> {
    ids.iter().map(|&s| vec![s]).collect()
}

fn ordered_pairs(ids: &[SetId]) -> Vec<Vec<SetId>> {
    ids.iter()
        .flat_map(|&s| ids.iter().map(move |&t| vec![s, t]))
        .collect()
}

fn require_atom_pair(universe: &Universe, a: SetId, b: SetId) -> Result<()> {
    for x in [a, b] {
        if !universe.node(x)?.is_atom() {
            return Err(Error::NotAtom(x));
        }
    }
    if a == b {
        return Err(Error::AtomsEqual);
    }
    Ok(())
}

fn has_non_individual(universe: &Universe, s: SetId) -> bool {
    universe.members_of(s).iter().any(|&u| !universe.contains(u, u))
}

fn has_individual(universe: &Universe, s: SetId) -> bool {
    universe.members_of(s).iter().any(|&u| universe.contains(u, u))
}

pub(crate) fn equality_scan(universe: &Universe, ids: &[SetId]) -> Scan {
    let claim = Claim::new(
        "equality",
        &["s", "t"],
        Some("forall u. (u in s <-> u in t)"),
        "forall u. (s in u <-> t in u)",
    );
    Scan::run(claim, ordered_pairs(ids), |t| {
        let (s, t) = (t[0], t[1]);
        if universe.members_of(s) != universe.members_of(t) {
            return Instance::Skip;
        }
        Instance::from_bool(
            ids.iter()
                .all(|&u| universe.contains(u, s) == universe.contains(u, t)),
        )
    })
}

pub(crate) fn individuals_scan(universe: &Universe, ids: &[SetId]) -> Scan {
    let claim = Claim::new(
        "individuals",
        &["s"],
        Some("s in s"),
        "forall u. (u in s -> u = s)",
    );
    Scan::run(claim, singles(ids), |t| {
        let s = t[0];
        if !universe.contains(s, s) {
            return Instance::Skip;
        }
        Instance::from_bool(universe.members_of(s) == [s])
    })
}

pub(crate) fn no_empty_scan(universe: &Universe, ids: &[SetId]) -> Scan {
    let claim = Claim::new("no-empty-set", &["s"], None, "exists u. (u in s)");
    Scan::run(claim, singles(ids), |t| {
        Instance::from_bool(!universe.members_of(t[0]).is_empty())
    })
}

pub(crate) fn regularity_scan(universe: &Universe, ids: &[SetId]) -> Scan {
    let claim = Claim::new(
        "regularity",
        &["s"],
        Some("exists u. (u in s & u notin u)"),
        "exists v. (v in s & v notin v & forall u. ((u in v & u in s) -> u in u))",
    );
    Scan::run(claim, singles(ids), |t| {
        let s = t[0];
        if !has_non_individual(universe, s) {
            return Instance::Skip;
        }
        Instance::from_bool(universe.members_of(s).iter().any(|&v| {
            !universe.contains(v, v)
                && universe
                    .members_of(v)
                    .iter()
                    .all(|&u| !universe.contains(s, u) || universe.contains(u, u))
        }))
    })
}

/// Equality substitution, the individuals axiom, nonemptiness and regularity.
pub fn check_axioms(universe: &Universe) -> Report {
    let ids = domain(universe);
    Report {
        universe: UniverseSummary::of(universe),
        results: [
            equality_scan(universe, &ids),
            individuals_scan(universe, &ids),
            no_empty_scan(universe, &ids),
            regularity_scan(universe, &ids),
        ]
        .iter()
        .map(Scan::result)
        .collect(),
    }
}

const RUSSELL: &str = "exists s. forall u. (u in s <-> u notin u)";
const EXCLUDED_INDIVIDUALS: &str =
    "forall s. exists u. ((u in s & u in u) | (u notin s & u notin u))";

fn non_self_members(universe: &Universe) -> Vec<SetId> {
    universe.ids().filter(|&u| !universe.contains(u, u)).collect()
}

pub(crate) fn russell_scan(universe: &Universe, ids: &[SetId]) -> Scan {
    let claim = Claim::new(
        "russell",
        &["s"],
        None,
        "!(forall u. (u in s <-> u notin u))",
    );
    let russell_members = non_self_members(universe);
    Scan::run(claim, singles(ids), |t| {
        Instance::from_bool(universe.members_of(t[0]) != russell_members.as_slice())
    })
}

/// No set has exactly the non-self-membered sets as members.
pub fn check_russell(universe: &Universe) -> CheckResult {
    russell_scan(universe, &domain(universe)).result()
}

pub(crate) fn russell_equivalence_scan(universe: &Universe, ids: &[SetId]) -> Scan {
    let sentence = format!("({EXCLUDED_INDIVIDUALS}) <-> !({RUSSELL})");
    let claim = Claim::new("russell-equivalence", &[], None, &sentence);
    let russell_members = non_self_members(universe);
    Scan::run(claim, vec![vec![]], |_| {
        let lhs = ids.iter().all(|&s| {
            ids.iter().any(|&u| {
                let (in_s, in_u) = (universe.contains(s, u), universe.contains(u, u));
                in_s == in_u
            })
        });
        let rhs = !ids
            .iter()
            .any(|&s| universe.members_of(s) == russell_members.as_slice());
        Instance::from_bool(lhs == rhs)
    })
}

/// Both sides of the Russell biconditional, evaluated independently, agree.
pub fn check_russell_equivalence(universe: &Universe) -> CheckResult {
    russell_equivalence_scan(universe, &domain(universe)).result()
}

/// Sides of the Russell biconditional: (excluded-individuals sentence, negated Russell sentence).
pub fn russell_sides(universe: &Universe) -> (bool, bool) {
    let env = Env::new();
    let lhs = evaluate(universe, &parse(EXCLUDED_INDIVIDUALS).unwrap(), &env).unwrap();
    let rhs = !evaluate(universe, &parse(RUSSELL).unwrap(), &env).unwrap();
    (lhs, rhs)
}

pub(crate) fn derivations_scan(universe: &mut Universe, ids: &[SetId]) -> Result<Scan> {
    let not_self = parse("x notin x").unwrap();
    let self_member = parse("x in x").unwrap();
    let mut specified = vec![(None, None); universe.len()];
    for &s in ids {
        let non_individuals = has_non_individual(universe, s)
            .then(|| specify(universe, s, &not_self, "x"))
            .transpose()?;
        let individuals = has_individual(universe, s)
            .then(|| specify(universe, s, &self_member, "x"))
            .transpose()?;
        specified[s.index()] = (non_individuals, individuals);
    }
    let claim = Claim::new(
        "subset-derivations",
        &["s"],
        None,
        "((exists u. (u in s & u notin u)) -> exists v. ((forall u. (u in v <-> (u in s & u notin u))) \
         & (forall u. (u in v -> u in s)) & v notin v & v notin s)) \
         & ((exists u. (u in s & u in u)) -> exists w. ((forall u. (u in w <-> (u in s & u in u))) \
         & (w notin w | (w in w & w in s)))) \
         & exists x. (x notin s)",
    );
    let u: &Universe = universe;
    let selects = |s: SetId, v: SetId, keep: bool| {
        let expected: Vec<SetId> = u
            .members_of(s)
            .iter()
            .copied()
            .filter(|&m| u.contains(m, m) == keep)
            .collect();
        u.members_of(v) == expected.as_slice()
    };
    let scan = Scan::run(claim, singles(ids), |t| {
        let s = t[0];
        let (non_individuals, individuals) = specified[s.index()];
        let first = match non_individuals {
            None => true,
            Some(SpecifyOutcome::Specified(v)) => {
                selects(s, v, false)
                    && u.is_subset(v, s).unwrap_or(false)
                    && !u.contains(v, v)
                    && !u.contains(s, v)
            }
            Some(SpecifyOutcome::NoSet(_)) => false,
        };
        let second = match individuals {
            None => true,
            Some(SpecifyOutcome::Specified(w)) => {
                selects(s, w, true) && (!u.contains(w, w) || u.contains(s, w))
            }
            Some(SpecifyOutcome::NoSet(_)) => false,
        };
        let not_universal = ids.iter().any(|&x| !u.contains(s, x));
        Instance::from_bool(first && second && not_universal)
    });
    Ok(scan)
}

/// Separation by `u ∉ u` yields a subset that is not a member; separation by
/// `u ∈ u` yields a non-individual or an individual member; no set is universal.
pub fn check_subset_derivations(universe: &mut Universe) -> Result<CheckResult> {
    let ids = domain(universe);
    derivations_scan(universe, &ids).map(|scan| scan.result())
}

fn theorem1_claim() -> Claim {
    let premise = format!(
        "{} & exists u. (u in s & u notin u)",
        transitive("s", "y", "z")
    );
    Claim::new(
        "theorem1",
        &["s"],
        Some(&premise),
        "exists v. (v in s & v notin v & forall u. (u in v -> u in u))",
    )
    .vacuous(Status::NotApplicable)
}

fn theorem1_scan_over(universe: &Universe, tuples: Vec<Vec<SetId>>) -> Scan {
    Scan::run(theorem1_claim(), tuples, |t| {
        let s = t[0];
        if !(universe.is_transitive(s).unwrap_or(false) && has_non_individual(universe, s)) {
            return Instance::Skip;
        }
        Instance::from_bool(universe.members_of(s).iter().any(|&v| {
            !universe.contains(v, v)
                && universe
                    .members_of(v)
                    .iter()
                    .all(|&u| universe.contains(u, u))
        }))
    })
}

pub(crate) fn theorem1_scan(universe: &Universe, ids: &[SetId]) -> Scan {
    theorem1_scan_over(universe, singles(ids))
}

/// Every transitive set with a non-individual member has a set of individuals as a member.
pub fn check_theorem1(universe: &Universe) -> CheckResult {
    theorem1_scan(universe, &domain(universe)).result()
}

pub fn check_theorem1_at(universe: &Universe, s: SetId) -> Result<CheckResult> {
    universe.check(s)?;
    Ok(theorem1_scan_over(universe, vec![vec![s]]).result())
}

pub(crate) fn pair_membership_scan(universe: &mut Universe, ids: &[SetId], a: SetId, b: SetId) -> Result<Scan> {
    require_atom_pair(universe, a, b)?;
    let p = pair(universe, a, b)?;
    let qualifies = |u: &Universe, s: SetId| {
        let individuals: Vec<SetId> = u
            .members_of(s)
            .iter()
            .copied()
            .filter(|&m| u.contains(m, m))
            .collect();
        let mut expected = [a, b];
        expected.sort();
        individuals == expected && u.is_transitive(s).unwrap_or(false)
    };
    let mut successor = vec![None; universe.len()];
    for &s in ids {
        if qualifies(universe, s) {
            let single = singleton(universe, s)?;
            successor[s.index()] = Some(binary_union(universe, s, single)?);
        }
    }
    let premise = format!(
        "{} & a in s & b in s & forall w. ((w in s & w in w) -> (w = a | w = b))",
        transitive("s", "y", "z")
    );
    let claim = Claim::new(
        "pair-membership",
        &["a", "b", "s"],
        Some(&premise),
        "exists p. ((forall x. (x in p <-> (x = a | x = b))) \
         & (forall m. ((m in s & m notin m & forall x. (x in m -> x in x)) -> m = p)) \
         & (p in s | p = s))",
    )
    .vacuous(Status::NotApplicable);
    let u: &Universe = universe;
    let tuples = ids.iter().map(|&s| vec![a, b, s]).collect();
    Ok(Scan::run(claim, tuples, |t| {
        let s = t[2];
        let Some(next) = successor[s.index()] else {
            return Instance::Skip;
        };
        let only_candidate = u.members_of(s).iter().all(|&m| {
            u.contains(m, m)
                || !u.members_of(m).iter().all(|&x| u.contains(x, x))
                || m == p
        });
        Instance::from_bool(only_candidate && u.contains(next, p))
    }))
}

/// For transitive `s` whose individuals are exactly `a` and `b`: `{a,b}` is the
/// only set of individuals in `s`, and `{a,b} ∈ s ∪ {s}`.
pub fn check_pair_membership_claim(universe: &mut Universe, a: SetId, b: SetId) -> Result<CheckResult> {
    let ids = domain(universe);
    pair_membership_scan(universe, &ids, a, b).map(|scan| scan.result())
}

pub(crate) fn trichotomy_scan(universe: &Universe, ids: &[SetId], a: SetId, b: SetId) -> Result<Scan> {
    require_atom_pair(universe, a, b)?;
    let eligible: Vec<bool> = ids
        .iter()
        .map(|&s| {
            !universe.contains(s, s)
                && is_deeply_transitive(universe, s)
                && universe
                    .members_of(s)
                    .iter()
                    .all(|&w| !universe.contains(w, w) || w == a || w == b)
        })
        .collect();
    let premise = format!(
        "{} & {} & (forall w. (((w in s | w in t) & w in w) -> (w = a | w = b))) & s notin s & t notin t",
        deeply_transitive("s", "x", "y", "z"),
        deeply_transitive("t", "x", "y", "z"),
    );
    let claim = Claim::new(
        "trichotomy",
        &["a", "b", "s", "t"],
        Some(&premise),
        "s in t | s = t | t in s",
    )
    .vacuous(Status::NotApplicable);
    let tuples = ordered_pairs(ids)
        .into_iter()
        .map(|st| vec![a, b, st[0], st[1]])
        .collect();
    Ok(Scan::run(claim, tuples, |tuple| {
        let (s, t) = (tuple[2], tuple[3]);
        if !(eligible[s.index()] && eligible[t.index()]) {
            return Instance::Skip;
        }
        Instance::from_bool(universe.contains(t, s) || s == t || universe.contains(s, t))
    }))
}

/// `s ∈ t ∨ s = t ∨ t ∈ s` for non-individual, transitive sets with transitive
/// members whose individuals lie in `{a, b}`.
pub fn check_trichotomy(universe: &Universe, a: SetId, b: SetId) -> Result<CheckResult> {
    trichotomy_scan(universe, &domain(universe), a, b).map(|scan| scan.result())
}

pub(crate) fn union_lemma_scan(universe: &mut Universe, ids: &[SetId]) -> Result<Scan> {
    let mut unions = vec![None; universe.len()];
    for &s in ids {
        if !universe.contains(s, s) && is_deeply_transitive(universe, s) {
            let w = union_all(universe, s)?;
            let single = singleton(universe, w)?;
            unions[s.index()] = Some((w, binary_union(universe, w, single)?));
        }
    }
    let premise = format!("s notin s & {}", deeply_transitive("s", "x", "y", "z"));
    let conclusion = format!(
        "exists w. ((forall x. (x in w <-> exists t. (t in s & x in t))) & {} & s notin w \
         & ((forall x. (x in w <-> x in s)) | (forall x. (x in s <-> (x in w | x = w)))))",
        deeply_transitive("w", "x", "y", "z"),
    );
    let claim = Claim::new("union-lemma", &["s"], Some(&premise), &conclusion)
        .vacuous(Status::NotApplicable);
    let u: &Universe = universe;
    Ok(Scan::run(claim, singles(ids), |t| {
        let s = t[0];
        let Some((w, successor)) = unions[s.index()] else {
            return Instance::Skip;
        };
        Instance::from_bool(
            is_deeply_transitive(u, w) && !u.contains(w, s) && (w == s || successor == s),
        )
    }))
}

/// For non-individual `s` that is transitive with transitive members, `⋃s`
/// is too, `s ∉ ⋃s`, and either `⋃s = s` or `s = ⋃s ∪ {⋃s}`.
pub fn check_union_lemma(universe: &mut Universe) -> Result<CheckResult> {
    let ids = domain(universe);
    union_lemma_scan(universe, &ids).map(|scan| scan.result())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Russell,
    Derivations,
    Theorem1,
    PairMembership,
    Trichotomy,
    UnionLemma,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "axioms",
        "russell",
        "derivations",
        "theorem1",
        "pair-membership",
        "trichotomy",
        "union-lemma",
        "all",
    ];

    pub fn needs_atom_pair(self) -> bool {
        matches!(self, Suite::Trichotomy | Suite::PairMembership)
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Ok(match s {
            "axioms" => Suite::Axioms,
            "russell" => Suite::Russell,
            "derivations" => Suite::Derivations,
            "theorem1" => Suite::Theorem1,
            "pair-membership" => Suite::PairMembership,
            "trichotomy" => Suite::Trichotomy,
            "union-lemma" => Suite::UnionLemma,
            "all" => Suite::All,
            other => {
                return Err(format!(
                    "unknown suite `{other}`, expected one of: {}",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}

/// Builds the scans of a suite over the sets present on entry. Checks that
/// construct sets (specification, unions, pairs) run after the others, and
/// the sets they add stay outside every scan's range.
pub fn scans(universe: &mut Universe, suite: Suite, atoms: Option<(SetId, SetId)>) -> Result<Vec<Scan>> {
    if suite.needs_atom_pair() && atoms.is_none() {
        return Err(Error::MissingAtomPair);
    }
    let ids = domain(universe);
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut out = Vec::new();
    if wants(Suite::Axioms) {
        out.extend([
            equality_scan(universe, &ids),
            individuals_scan(universe, &ids),
            no_empty_scan(universe, &ids),
            regularity_scan(universe, &ids),
        ]);
    }
    if wants(Suite::Russell) {
        out.push(russell_scan(universe, &ids));
        out.push(russell_equivalence_scan(universe, &ids));
    }
    if wants(Suite::Theorem1) {
        out.push(theorem1_scan(universe, &ids));
    }
    if let (true, Some((a, b))) = (wants(Suite::Trichotomy), atoms) {
        out.push(trichotomy_scan(universe, &ids, a, b)?);
    }
    if wants(Suite::Derivations) {
        out.push(derivations_scan(universe, &ids)?);
    }
    if let (true, Some((a, b))) = (wants(Suite::PairMembership), atoms) {
        out.push(pair_membership_scan(universe, &ids, a, b)?);
    }
    if wants(Suite::UnionLemma) {
        out.push(union_lemma_scan(universe, &ids)?);
    }
    Ok(out)
}

/// Runs a suite and collects its results in a report.
pub fn run_suite(universe: &mut Universe, suite: Suite, atoms: Option<(SetId, SetId)>) -> Result<Report> {
    let summary = UniverseSummary::of(universe);
    let results = scans(universe, suite, atoms)?
        .iter()
        .map(Scan::result)
        .collect();
    Ok(Report {
        universe: summary,
        results,
    })
}
