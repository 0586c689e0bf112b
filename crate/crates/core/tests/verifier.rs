use quine_sets::formula::{evaluate, parse};
use quine_sets::verifier::{
    check_axioms, check_pair_membership_claim, check_russell, check_russell_equivalence,
    check_subset_derivations, check_theorem1, check_theorem1_at, check_trichotomy,
    check_union_lemma, russell_sides, run_suite, scans, Suite,
};
use quine_sets::{
    build, specify, BuildConfig, Error, SetId, SpecifyOutcome, Status, Universe,
};

fn universe(atoms: &[&str], depth: usize) -> Universe {
    build(&BuildConfig::new(atoms.iter().copied(), depth)).unwrap().0
}

fn default_universe() -> (Universe, SetId, SetId) {
    let u = universe(&["u", "v"], 3);
    let (a, b) = (u.atoms()[0], u.atoms()[1]);
    (u, a, b)
}

#[test]
fn axioms_hold_on_the_default_universe() {
    let (u, ..) = default_universe();
    let report = check_axioms(&u);
    let names: Vec<&str> = report.results.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["equality", "individuals", "no-empty-set", "regularity"]);
    for r in &report.results {
        assert_eq!(r.status, Status::Holds, "{r:?}");
    }
    assert_eq!(report.get("no-empty-set").unwrap().scanned, 127);
    assert_eq!(report.get("individuals").unwrap().scanned, 2);
    assert_eq!(report.get("equality").unwrap().scanned, 127);
    assert_eq!(report.universe.size, 127);
    assert_eq!(report.universe.depth, Some(3));
}

#[test]
fn axioms_on_a_single_atom() {
    let u = universe(&["a"], 2);
    let report = check_axioms(&u);
    assert!(report.results.iter().all(|r| r.status == Status::Holds));
    assert_eq!(report.get("regularity").unwrap().scanned, 0);
}

#[test]
fn self_membered_composite_breaks_the_individuals_axiom() {
    let (mut u, a, _) = default_universe();
    let bad = u.insert_self_member(&[a]).unwrap();
    let report = check_axioms(&u);
    let individuals = report.get("individuals").unwrap();
    assert_eq!(individuals.status, Status::Fails);
    let witness = individuals.witness.as_ref().unwrap();
    assert_eq!(witness.ids, vec![bad]);
    let formula = parse(&witness.formula).unwrap();
    assert!(!evaluate(&u, &formula, &witness.env()).unwrap());
    assert!(u.is_individual(bad).unwrap());
}

#[test]
fn russell_checks() {
    for u in [universe(&["u", "v"], 3), universe(&["a"], 2), universe(&["o", "a", "e"], 2)] {
        let r = check_russell(&u);
        assert_eq!(r.status, Status::Holds);
        assert_eq!(r.scanned, u.len());
        assert_eq!(check_russell_equivalence(&u).status, Status::Holds);
        assert_eq!(russell_sides(&u), (true, true));
    }
}

#[test]
fn russell_equivalence_under_negative_control() {
    let (mut u, a, b) = default_universe();
    u.insert_self_member(&[a, b]).unwrap();
    let (lhs, rhs) = russell_sides(&u);
    let result = check_russell_equivalence(&u);
    if lhs == rhs {
        assert_eq!(result.status, Status::Holds);
    } else {
        assert_eq!(result.status, Status::Fails);
        assert!(result.witness.is_some());
    }
}

#[test]
fn subset_derivation_examples() {
    let mut un = Universe::new(&["u", "v"]).unwrap();
    let (a, b) = (un.atoms()[0], un.atoms()[1]);
    let p = un.intern_set([a, b]).unwrap();
    let s = un.intern_set([a, b, p]).unwrap();
    let not_self = parse("x notin x").unwrap();
    let v = specify(&mut un, s, &not_self, "x").unwrap().specified().unwrap();
    assert_eq!(un.literal(v).unwrap(), "{{u,v}}");
    assert!(!un.is_member(v, s).unwrap());

    let q = un.intern_set([a, p]).unwrap();
    let self_member = parse("x in x").unwrap();
    let w = specify(&mut un, q, &self_member, "x").unwrap();
    assert_eq!(w, SpecifyOutcome::Specified(a));
    assert!(un.is_individual(a).unwrap() && un.is_member(a, q).unwrap());
}

#[test]
fn subset_derivations_hold_everywhere() {
    let (mut u, ..) = default_universe();
    let before = u.len();
    let r = check_subset_derivations(&mut u).unwrap();
    assert_eq!(r.status, Status::Holds, "{r:?}");
    assert_eq!(r.scanned, before);
    // members of the top stage all come from the stage below, so every
    // specified subset was already enumerated
    assert_eq!(u.len(), before);
}

#[test]
fn theorem1() {
    let (mut u, a, b) = default_universe();
    let r = check_theorem1(&u);
    assert_eq!(r.status, Status::Holds);
    assert!(r.scanned > 0);
    assert_eq!(check_theorem1_at(&u, a).unwrap().status, Status::NotApplicable);
    let p = u.find([a, b]).unwrap();
    let s = u.find([a, b, p]).unwrap();
    let at = check_theorem1_at(&u, s).unwrap();
    assert_eq!((at.status, at.scanned), (Status::Holds, 1));
    let q = u.intern_set([p]).unwrap();
    assert_eq!(check_theorem1_at(&u, q).unwrap().status, Status::NotApplicable);
}

#[test]
fn pair_membership_and_trichotomy() {
    let (mut u, a, b) = default_universe();
    let expected = qualifying(&u, a, b);
    let r = check_pair_membership_claim(&mut u, a, b).unwrap();
    assert_eq!(r.status, Status::Holds, "{r:?}");
    assert_eq!(r.scanned, expected);
    assert!(r.scanned >= 2);

    let t = check_trichotomy(&u, a, b).unwrap();
    assert_eq!(t.status, Status::Holds, "{t:?}");
    assert!(t.scanned > 0);

    assert_eq!(check_trichotomy(&u, a, a).unwrap_err(), Error::AtomsEqual);
    let p = u.find([a, b]).unwrap();
    assert_eq!(check_trichotomy(&u, a, p).unwrap_err(), Error::NotAtom(p));
}

/// Transitive sets whose individuals are exactly {a, b}, counted directly.
fn qualifying(u: &Universe, a: SetId, b: SetId) -> usize {
    u.ids()
        .filter(|&s| {
            let members = u.members(s).unwrap();
            let atoms: Vec<SetId> = members.iter().copied().filter(|&m| u.is_individual(m).unwrap()).collect();
            atoms == [a, b] && u.is_transitive(s).unwrap()
        })
        .count()
}

#[test]
fn union_lemma() {
    let (mut u, a, b) = default_universe();
    let r = check_union_lemma(&mut u).unwrap();
    assert_eq!(r.status, Status::Holds, "{r:?}");
    assert!(r.scanned >= 3);
    let p = u.find([a, b]).unwrap();
    assert_eq!(quine_sets::union_all(&mut u, p).unwrap(), p);
}

#[test]
fn every_scan_agrees_with_formula_evaluation() {
    for (atoms, depth) in [(vec!["u", "v"], 3), (vec!["a"], 2), (vec!["o", "a", "e"], 2)] {
        let mut u = universe(&atoms, depth);
        let pair = match u.atoms() {
            [a, b, ..] => Some((*a, *b)),
            _ => None,
        };
        let all = scans(&mut u, Suite::All, pair).unwrap();
        for scan in &all {
            let disagreements = scan.disagreements(&u).unwrap();
            assert!(
                disagreements.is_empty(),
                "{} disagrees at {:?}",
                scan.claim.name,
                disagreements.iter().map(|&i| &scan.tuples[i]).collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let (mut u, a, b) = default_universe();
        serde_json::to_string(&run_suite(&mut u, Suite::All, Some((a, b))).unwrap()).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn suites_needing_atoms_reject_missing_pair() {
    let (mut u, ..) = default_universe();
    assert_eq!(
        run_suite(&mut u, Suite::Trichotomy, None).unwrap_err(),
        Error::MissingAtomPair
    );
    let report = run_suite(&mut u, Suite::All, None).unwrap();
    assert!(report.get("trichotomy").is_none());
    assert!(report.all_hold());
}
