//! Staged enumeration of the hereditarily finite universe over a fixed atom list.
//!
//! Stage 0 holds the atoms. Stage `k + 1` interns every nonempty subset of the
//! whole stage-`k` domain. Because each stage is downward closed, a domain of
//! `n` sets always grows to exactly `2^n - 1` sets, which is what the cap is
//! checked against before any enumeration starts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{SetId, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildConfig {
    pub atom_names: Vec<String>,
    pub depth: usize,
    pub max_sets: usize,
}

impl BuildConfig {
    pub const DEFAULT_MAX_SETS: usize = 100_000;

    pub fn new<S: Into<String>>(atoms: impl IntoIterator<Item = S>, depth: usize) -> BuildConfig {
        BuildConfig {
            atom_names: atoms.into_iter().map(Into::into).collect(),
            depth,
            max_sets: Self::DEFAULT_MAX_SETS,
        }
    }

    pub fn with_max_sets(mut self, max_sets: usize) -> BuildConfig {
        self.max_sets = max_sets;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    /// `(stage, cumulative set count)` for stages `0..=depth`.
    pub stages: Vec<(usize, usize)>,
    /// First stage that added nothing, after which enumeration was skipped.
    pub fixed_point: Option<usize>,
    /// Ids below this bound have their powerset and pairings inside the universe.
    pub closed_prefix: usize,
}

impl StageReport {
    pub fn stage_counts(&self) -> Vec<usize> {
        self.stages.iter().map(|&(_, count)| count).collect()
    }
}

pub fn stage_counts(report: &StageReport) -> Vec<usize> {
    report.stage_counts()
}

pub fn build(config: &BuildConfig) -> Result<(Universe, StageReport)> {
    if config.max_sets < config.atom_names.len() {
        return Err(Error::InvalidConfig(format!(
            "max_sets {} is smaller than the {} atoms",
            config.max_sets,
            config.atom_names.len()
        )));
    }
    let mut universe = Universe::new(&config.atom_names)?;
    universe.set_max_sets(config.max_sets);
    universe.set_depth(Some(config.depth));

    let mut stages = vec![(0, universe.len())];
    let mut fixed_point = None;
    for stage in 1..=config.depth {
        let domain = universe.len();
        if fixed_point.is_some() {
            stages.push((stage, domain));
            continue;
        }
        let required = 1u128
            .checked_shl(domain as u32)
            .filter(|_| domain < 64)
            .map(|p| p - 1);
        if required.is_none_or(|r| r > config.max_sets as u128) {
            return Err(Error::CapExceeded {
                stage,
                domain,
                cap: config.max_sets,
            });
        }
        add_stage(&mut universe, domain)?;
        debug_assert_eq!(Some(universe.len() as u128), required);
        if universe.len() == domain {
            fixed_point = Some(stage);
        }
        stages.push((stage, universe.len()));
    }

    let closed_prefix = match config.depth {
        0 => universe.len(),
        d => stages[d - 1].1,
    };
    Ok((
        universe,
        StageReport {
            stages,
            fixed_point,
            closed_prefix,
        },
    ))
}

/// Interns every nonempty subset of the first `domain` ids, in mask order.
fn add_stage(universe: &mut Universe, domain: usize) -> Result<()> {
    let ids: Vec<SetId> = universe.ids().take(domain).collect();
    let mut members = Vec::with_capacity(domain);
    for mask in 1u64..(1u64 << domain) {
        members.clear();
        members.extend(
            ids.iter()
                .enumerate()
                .filter(|&(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &id)| id),
        );
        universe.intern_sorted(members.clone())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_zero_is_atoms_only() {
        let (u, report) = build(&BuildConfig::new(["u", "v"], 0)).unwrap();
        assert_eq!(u.len(), 2);
        assert_eq!(report.stage_counts(), vec![2]);
        assert_eq!(report.closed_prefix, 2);
    }

    #[test]
    fn two_atoms() {
        let (u, report) = build(&BuildConfig::new(["u", "v"], 2)).unwrap();
        assert_eq!(u.len(), 7);
        assert_eq!(stage_counts(&report), vec![2, 3, 7]);
        let (u, report) = build(&BuildConfig::new(["u", "v"], 3)).unwrap();
        assert_eq!(u.len(), 127);
        assert_eq!(report.stage_counts(), vec![2, 3, 7, 127]);
        assert_eq!(report.fixed_point, None);
        assert_eq!(report.closed_prefix, 7);
    }

    #[test]
    fn single_atom_is_a_fixed_point() {
        let (u, report) = build(&BuildConfig::new(["a"], 3)).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(report.stage_counts(), vec![1, 1, 1, 1]);
        assert_eq!(report.fixed_point, Some(1));
    }

    #[test]
    fn cap_aborts_with_stage() {
        let err = build(&BuildConfig::new(["u", "v"], 4).with_max_sets(1000)).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                stage: 4,
                domain: 127,
                cap: 1000
            }
        );
        assert_eq!(err.required_sets(), Some((1u128 << 127) - 1));
        let err = build(&BuildConfig::new(["u", "v"], 3).with_max_sets(126)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { stage: 3, .. }));
    }

    #[test]
    fn config_errors() {
        assert!(matches!(
            build(&BuildConfig::new(["u", "u"], 1)),
            Err(Error::DuplicateAtomName(_))
        ));
        assert!(matches!(
            build(&BuildConfig::new(["u", "v", "w"], 1).with_max_sets(2)),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn members_precede_their_sets() {
        let (u, _) = build(&BuildConfig::new(["u", "v"], 3)).unwrap();
        for s in u.ids() {
            for &m in u.members(s).unwrap() {
                assert!(m < s || (m == s && u.is_individual(s).unwrap()));
                if m != s {
                    assert!(u.rank(m).unwrap() < u.rank(s).unwrap());
                }
            }
        }
    }
}
