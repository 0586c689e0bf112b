//! Cross-checks the interning builder and the constructors against the
//! structural model in `common`.

mod common;

use std::collections::BTreeSet;

use common::{nonempty_subsets, oracle_stage_counts, to_hf, Hf};
use quine_sets::{build, powerset, union_all, BuildConfig, SetId};

#[test]
fn stage_counts_match_brute_force() {
    let (counts, _) = oracle_stage_counts(&["u", "v"], 3);
    assert_eq!(counts, [2, 3, 7, 127]);
    let (counts, _) = oracle_stage_counts(&["a"], 3);
    assert_eq!(counts, [1, 1, 1, 1]);
    let (counts, _) = oracle_stage_counts(&["o", "a", "e"], 2);
    assert_eq!(counts, [3, 7, 127]);

    for (atoms, depth) in [(vec!["u", "v"], 3), (vec!["a"], 3), (vec!["o", "a", "e"], 2)] {
        let (oracle, _) = oracle_stage_counts(&atoms, depth);
        let (_, report) = build(&BuildConfig::new(atoms, depth)).unwrap();
        assert_eq!(report.stage_counts(), oracle);
    }
}

#[test]
fn built_universe_is_the_oracle_domain() {
    let (_, domain) = oracle_stage_counts(&["u", "v"], 3);
    let (universe, _) = build(&BuildConfig::new(["u", "v"], 3)).unwrap();
    let built: BTreeSet<Hf> = universe.ids().map(|id| to_hf(&universe, id)).collect();
    assert_eq!(built.len(), universe.len());
    assert_eq!(built, domain);
}

#[test]
fn constructors_match_structural_definitions() {
    let (mut universe, _) = build(&BuildConfig::new(["u", "v"], 2)).unwrap();
    let ids: Vec<SetId> = universe.ids().collect();
    for &s in &ids {
        let model = to_hf(&universe, s);

        let union: BTreeSet<Hf> = model.members().iter().flat_map(Hf::members).collect();
        let got = union_all(&mut universe, s).unwrap();
        assert_eq!(to_hf(&universe, got), Hf::set(union));

        let members: Vec<Hf> = model.members().into_iter().collect();
        let subsets: BTreeSet<Hf> = nonempty_subsets(&members).into_iter().map(Hf::set).collect();
        let got = powerset(&mut universe, s).unwrap();
        assert_eq!(to_hf(&universe, got), Hf::set(subsets));
    }
}

#[test]
fn literal_printing_agrees_with_the_model() {
    let (universe, _) = build(&BuildConfig::new(["u", "v"], 2)).unwrap();
    let order = |h: &Hf| {
        universe
            .ids()
            .position(|id| &to_hf(&universe, id) == h)
            .unwrap()
    };
    for id in universe.ids() {
        assert_eq!(universe.literal(id).unwrap(), to_hf(&universe, id).literal(&order));
    }
}
