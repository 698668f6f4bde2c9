//! Levels, twists, duality and the rank-changing bijections on labels.
//!
//! The true level of a label is `n` minus the first part of the partition at
//! the unit class of 1 (absent entry reads as first part 0); the level takes
//! the maximum of first parts over all unit classes, which makes it invariant
//! under twisting by linear characters.

use super::{CharLabel, EigenOrbit, OrbitKind};
use crate::error::{Error, Result};
use crate::qcomb::Partition;
use std::collections::BTreeMap;

/// `n − (first part of the partition at unit class 1)`.
pub fn true_level(label: &CharLabel) -> u32 {
    let first = label.unit_one_partition().map_or(0, |p| p.first_part());
    label.spec().n - first
}

/// `n − max over unit classes of the first part`; at most the true level.
pub fn level(label: &CharLabel) -> u32 {
    let best = label
        .entries()
        .iter()
        .filter(|(orbit, _)| orbit.is_unit())
        .map(|(_, lam)| lam.first_part())
        .max()
        .unwrap_or(0);
    label.spec().n - best
}

/// Level of any irreducible character of `SL^ε_n(q)` lying under the label:
/// well-defined as the level of the covering label.
pub fn slu_level(label: &CharLabel) -> u32 {
    level(label)
}

/// Orbit-index permutations induced by scaling with the canonical generator
/// of `μ_{q−ε}`, one permutation per orbit degree (explicit mode).
#[derive(Clone, Debug, Default)]
pub struct ScalingTables {
    /// For each degree `d`, `perm[i]` is the index of the scaled orbit.
    pub by_degree: BTreeMap<u32, Vec<u32>>,
}

/// Twist by the `c`-th power of the canonical linear character: unit classes
/// shift their residue by `c`; generic classes move along the scaling table.
/// Without tables, labels with generic support cannot be twisted.
pub fn twist_by_linear(
    label: &CharLabel,
    c: u32,
    tables: Option<&ScalingTables>,
) -> Result<CharLabel> {
    let spec = label.spec();
    let center = (spec.q as i64 - spec.eps.as_i64()) as u64;
    let c = (c as u64 % center) as u32;
    let mut entries = BTreeMap::new();
    for (orbit, lam) in label.entries() {
        let new_orbit = match orbit.kind {
            OrbitKind::Unit { c: a } => EigenOrbit::unit(((a as u64 + c as u64) % center) as u32),
            OrbitKind::Generic { index } => {
                let Some(tables) = tables else {
                    return Err(Error::Unsupported(
                        "twisting a generic orbit requires explicit-mode scaling tables".into(),
                    ));
                };
                let perm = tables.by_degree.get(&orbit.d).ok_or_else(|| {
                    Error::Unsupported(format!("no scaling table for orbit degree {}", orbit.d))
                })?;
                let mut idx = index;
                for _ in 0..c {
                    idx = perm[idx as usize];
                }
                EigenOrbit::generic(orbit.d, idx)
            }
        };
        if entries.insert(new_orbit, lam.clone()).is_some() {
            return Err(Error::InvalidInput(
                "scaling table is not a permutation: internal defect".into(),
            ));
        }
    }
    CharLabel::new(spec, entries)
}

/// Alvis-Curtis duality at the label level: conjugate every partition, same
/// orbit support. Involutive.
pub fn alvis_curtis_dual(label: &CharLabel) -> CharLabel {
    let entries = label
        .entries()
        .iter()
        .map(|(orbit, lam)| (*orbit, lam.conjugate()))
        .collect();
    CharLabel::new(label.spec(), entries).expect("conjugation preserves label validity")
}

/// Rank-raising bijection: send a label of `GL^ε_j(q)` with true level
/// `≥ 2j − n` to the label of `GL^ε_n(q)` obtained by prepending `n − j` to
/// the partition at the unit class of 1 (creating the entry if absent). The
/// result has true level exactly `j`.
pub fn theta_inverse(alpha: &CharLabel, n: u32) -> Result<CharLabel> {
    let sspec = alpha.spec();
    let j = sspec.n;
    assert!(j <= n, "theta_inverse cannot lower the rank");
    // The prepend is valid exactly when the true-level condition holds.
    if (true_level(alpha) as i64) < 2 * j as i64 - n as i64 {
        return Err(Error::InvalidInput(format!(
            "true level {} is below 2j - n = {}",
            true_level(alpha),
            2 * j as i64 - n as i64
        )));
    }
    let new_first = n - j;
    if new_first == 0 {
        return Ok(alpha.clone());
    }
    let mut entries = alpha.entries().clone();
    let unit_one = EigenOrbit::unit(0);
    let old = entries.remove(&unit_one).unwrap_or_else(Partition::empty);
    let lifted = old.with_prepended_part(new_first)?;
    entries.insert(unit_one, lifted);
    let mut spec = sspec;
    spec.n = n;
    let out = CharLabel::new(spec, entries)?;
    debug_assert_eq!(true_level(&out), j);
    Ok(out)
}

/// Inverse of [`theta_inverse`]: for a label of true level `j`, remove the
/// first part (`= n − j`) of the partition at the unit class of 1, landing in
/// `GL^ε_j(q)`.
pub fn theta_forward(label: &CharLabel) -> Result<CharLabel> {
    let spec = label.spec();
    let j = true_level(label);
    if j == spec.n {
        return Ok(label.clone());
    }
    let mut entries = label.entries().clone();
    let unit_one = EigenOrbit::unit(0);
    let lam = entries
        .remove(&unit_one)
        .expect("true level below n forces a unit-1 entry");
    let rest = lam.without_first_row();
    if !rest.is_empty() {
        entries.insert(unit_one, rest);
    }
    let mut sspec = spec;
    sspec.n = j;
    let out = CharLabel::new(sspec, entries)?;
    debug_assert!(true_level(&out) as i64 >= 2 * j as i64 - spec.n as i64);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::GroupSpec;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn label_of(spec: GroupSpec, entries: Vec<(EigenOrbit, Partition)>) -> CharLabel {
        CharLabel::new(spec, entries.into_iter().collect()).unwrap()
    }

    #[test]
    fn levels_of_named_labels() {
        let spec = GroupSpec::gl(4, 3);
        let trivial = CharLabel::trivial(spec);
        assert_eq!((true_level(&trivial), level(&trivial)), (0, 0));
        let st = CharLabel::steinberg(spec);
        assert_eq!((true_level(&st), level(&st)), (3, 3));
        // Unipotent one-step label (n-1, 1): level 1.
        let weil = label_of(spec, vec![(EigenOrbit::unit(0), pt(&[3, 1]))]);
        assert_eq!((true_level(&weil), level(&weil)), (1, 1));
        // Nontrivial linear character: true level n, level 0.
        let lin = label_of(spec, vec![(EigenOrbit::unit(1), pt(&[4]))]);
        assert_eq!((true_level(&lin), level(&lin)), (4, 0));
    }

    #[test]
    fn twist_moves_unit_classes() {
        let spec = GroupSpec::gl(4, 3);
        let lin = label_of(spec, vec![(EigenOrbit::unit(1), pt(&[4]))]);
        let back = twist_by_linear(&lin, 1, None).unwrap();
        assert_eq!(back, CharLabel::trivial(spec));
        assert_eq!(twist_by_linear(&lin, 0, None).unwrap(), lin);
        assert_eq!(level(&back), level(&lin));
    }

    #[test]
    fn duality_cases() {
        let spec = GroupSpec::gl(5, 2);
        assert_eq!(
            alvis_curtis_dual(&CharLabel::trivial(spec)),
            CharLabel::steinberg(spec)
        );
        // Self-conjugate partitions everywhere: fixed point.
        let sc = label_of(spec, vec![(EigenOrbit::unit(0), pt(&[3, 1, 1]))]);
        assert_eq!(alvis_curtis_dual(&sc), sc);
        // Involution.
        let any = label_of(spec, vec![(EigenOrbit::unit(0), pt(&[3, 2]))]);
        assert_eq!(alvis_curtis_dual(&alvis_curtis_dual(&any)), any);
    }

    #[test]
    fn dual_level_sum_bound() {
        // Two-row labels ((n+1)/2, (n-1)/2): level (n-1)/2, and the level sum
        // with the dual stays at or above n-1; equality happens at n = 3
        // where the partition is self-conjugate.
        for n in [3u32, 5, 7] {
            let spec = GroupSpec::gl(n, 2);
            let lam = pt(&[(n + 1) / 2, (n - 1) / 2]);
            let label = label_of(spec, vec![(EigenOrbit::unit(0), lam)]);
            let dual = alvis_curtis_dual(&label);
            assert_eq!(level(&label), (n - 1) / 2);
            assert!(level(&label) + level(&dual) >= n - 1);
        }
        let three = label_of(
            GroupSpec::gl(3, 2),
            vec![(EigenOrbit::unit(0), pt(&[2, 1]))],
        );
        assert_eq!(level(&three) + level(&alvis_curtis_dual(&three)), 2);
    }

    #[test]
    fn theta_round_trip() {
        // Trivial label of GL_j lifts to (n-j, j).
        let alpha = CharLabel::trivial(GroupSpec::gl(2, 3));
        let lifted = theta_inverse(&alpha, 5).unwrap();
        assert_eq!(
            lifted,
            label_of(
                GroupSpec::gl(5, 3),
                vec![(EigenOrbit::unit(0), pt(&[3, 2]))]
            )
        );
        assert_eq!(true_level(&lifted), 2);
        assert_eq!(theta_forward(&lifted).unwrap(), alpha);

        // Steinberg of GL_2 lifts into rank 4 as (2,1,1).
        let st2 = CharLabel::steinberg(GroupSpec::gl(2, 3));
        let lifted2 = theta_inverse(&st2, 4).unwrap();
        assert_eq!(
            lifted2,
            label_of(
                GroupSpec::gl(4, 3),
                vec![(EigenOrbit::unit(0), pt(&[2, 1, 1]))]
            )
        );

        // Steinberg of GL_n has true level n-1 and steps down to Steinberg of
        // rank n-1.
        let st = CharLabel::steinberg(GroupSpec::gl(4, 2));
        assert_eq!(
            theta_forward(&st).unwrap(),
            CharLabel::steinberg(GroupSpec::gl(3, 2))
        );

        // j = n needs true level exactly n; the cuspidal label qualifies and
        // the map is the identity.
        let mut entries = std::collections::BTreeMap::new();
        entries.insert(EigenOrbit::generic(3, 0), pt(&[1]));
        let cuspidal = CharLabel::new(GroupSpec::gl(3, 2), entries).unwrap();
        assert_eq!(true_level(&cuspidal), 3);
        assert_eq!(theta_inverse(&cuspidal, 3).unwrap(), cuspidal);
        // Steinberg has true level n-1 < n and is rejected at j = n.
        let full = CharLabel::steinberg(GroupSpec::gl(3, 2));
        assert!(theta_inverse(&full, 3).is_err());
    }

    #[test]
    fn theta_inverse_rejects_low_true_level() {
        // Label of GL_3 with true level 1 cannot lift to n = 4 (2j - n = 2).
        let alpha = label_of(
            GroupSpec::gl(3, 2),
            vec![(EigenOrbit::unit(0), pt(&[2, 1]))],
        );
        assert_eq!(true_level(&alpha), 1);
        assert!(theta_inverse(&alpha, 4).is_err());
    }
}
