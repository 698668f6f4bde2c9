//! Counting-mode enumeration of all character labels of a group.
//!
//! No field elements are constructed: generic orbit classes enter only
//! through their per-degree counts (Möbius inversion) and canonical indices.
//! Each label of `GL^ε_n(q)` is produced exactly once; the total is the class
//! number `k(G)`.

use super::counts::{orbit_class_counts, OrbitClassCounts};
use crate::error::{Error, Result};
use crate::gfcore::GroupSpec;
use crate::labels::{CharLabel, EigenOrbit};
use crate::qcomb::{partitions_of, Partition};
use crate::Int;
use std::collections::BTreeMap;

/// Enumerate every label of the (general) group named by `spec`.
pub fn enumerate_labels(spec: &GroupSpec) -> Result<Vec<CharLabel>> {
    enumerate_labels_guarded(spec, 5_000_000)
}

/// Enumeration with an explicit output-size guard.
pub fn enumerate_labels_guarded(spec: &GroupSpec, max_labels: u64) -> Result<Vec<CharLabel>> {
    if spec.special {
        return Err(Error::Unsupported(
            "label enumeration below the general group is not defined here".into(),
        ));
    }
    let n = spec.n;
    let counts = orbit_class_counts(spec, n.max(1));
    let mut out: Vec<CharLabel> = Vec::new();
    let mut entries: BTreeMap<EigenOrbit, Partition> = BTreeMap::new();
    unit_slots(spec, &counts, 0, n, &mut entries, &mut out, max_labels)?;
    Ok(out)
}

/// Assign partitions to the `q − ε` unit classes, then hand the remaining
/// weight to the generic degrees.
fn unit_slots(
    spec: &GroupSpec,
    counts: &OrbitClassCounts,
    slot: u64,
    remaining: u32,
    entries: &mut BTreeMap<EigenOrbit, Partition>,
    out: &mut Vec<CharLabel>,
    max_labels: u64,
) -> Result<()> {
    if slot == counts.unit {
        return generic_degrees(spec, counts, 2, remaining, entries, out, max_labels);
    }
    for w in 0..=remaining {
        for lam in partitions_of(w) {
            if w > 0 {
                entries.insert(EigenOrbit::unit(slot as u32), lam);
            }
            unit_slots(
                spec,
                counts,
                slot + 1,
                remaining - w,
                entries,
                out,
                max_labels,
            )?;
            if w > 0 {
                entries.remove(&EigenOrbit::unit(slot as u32));
            }
            if w == 0 {
                break; // only one "partition of 0"
            }
        }
    }
    Ok(())
}

/// Distribute the remaining weight over generic degrees `d, d+1, …`.
fn generic_degrees(
    spec: &GroupSpec,
    counts: &OrbitClassCounts,
    d: u32,
    remaining: u32,
    entries: &mut BTreeMap<EigenOrbit, Partition>,
    out: &mut Vec<CharLabel>,
    max_labels: u64,
) -> Result<()> {
    if remaining == 0 {
        if out.len() as u64 >= max_labels {
            return Err(Error::GuardExceeded(format!(
                "label enumeration for {} exceeds {} labels",
                spec, max_labels
            )));
        }
        out.push(CharLabel::new(*spec, entries.clone()).expect("enumeration builds valid labels"));
        return Ok(());
    }
    if d > remaining {
        return Ok(());
    }
    let classes = counts.generic_at(d);
    let class_count = u64::try_from(&classes).unwrap_or(u64::MAX);
    // Weight consumed at this degree: d times the total partition size over
    // the classes used, assigned to strictly increasing class indices.
    degree_assignments(
        spec,
        counts,
        d,
        class_count,
        0,
        remaining,
        entries,
        out,
        max_labels,
    )
}

#[allow(clippy::too_many_arguments)]
fn degree_assignments(
    spec: &GroupSpec,
    counts: &OrbitClassCounts,
    d: u32,
    class_count: u64,
    next_index: u64,
    remaining: u32,
    entries: &mut BTreeMap<EigenOrbit, Partition>,
    out: &mut Vec<CharLabel>,
    max_labels: u64,
) -> Result<()> {
    // Stop using degree d and move on.
    generic_degrees(spec, counts, d + 1, remaining, entries, out, max_labels)?;
    if remaining < d {
        return Ok(());
    }
    let max_size = remaining / d;
    for index in next_index..class_count {
        for size in 1..=max_size {
            for lam in partitions_of(size) {
                let orbit = EigenOrbit::generic(d, index as u32);
                entries.insert(orbit, lam);
                degree_assignments(
                    spec,
                    counts,
                    d,
                    class_count,
                    index + 1,
                    remaining - d * size,
                    entries,
                    out,
                    max_labels,
                )?;
                entries.remove(&orbit);
            }
        }
    }
    Ok(())
}

/// Class number `k(G)` as the label count.
pub fn class_number(spec: &GroupSpec) -> Result<Int> {
    Ok(Int::from(enumerate_labels(spec)?.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn gl1_labels_are_linear_characters() {
        for q in [2u64, 3, 5, 7] {
            let labels = enumerate_labels(&GroupSpec::gl(1, q)).unwrap();
            assert_eq!(labels.len() as u64, q - 1);
        }
    }

    #[test]
    fn gl2_label_count_is_q_squared_minus_one() {
        for q in [2u64, 3, 4, 5] {
            let labels = enumerate_labels(&GroupSpec::gl(2, q)).unwrap();
            assert_eq!(labels.len() as u64, q * q - 1, "q = {}", q);
        }
    }

    #[test]
    fn gu2_label_count_is_q_plus_one_squared() {
        // Derived by brute force: k(GU_2(q)) = (q+1)^2.
        for q in [2u64, 3, 4] {
            let labels = enumerate_labels(&GroupSpec::gu(2, q)).unwrap();
            assert_eq!(labels.len() as u64, (q + 1) * (q + 1), "q = {}", q);
        }
    }

    #[test]
    fn labels_are_distinct() {
        let labels = enumerate_labels(&GroupSpec::gl(3, 3)).unwrap();
        let set: HashSet<String> = labels.iter().map(|l| l.to_json()).collect();
        assert_eq!(set.len(), labels.len());
    }
}
