//! Degree multisets, level statistics and class-number bounds from the label
//! census.

use super::enumerate::enumerate_labels;
use crate::error::Result;
use crate::gfcore::GroupSpec;
use crate::labels::{degree, level, true_level};
use crate::Int;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Multiset of character degrees: degree -> multiplicity.
pub fn degree_multiset(spec: &GroupSpec) -> Result<BTreeMap<Int, u64>> {
    let mut out = BTreeMap::new();
    for label in enumerate_labels(spec)? {
        *out.entry(degree(&label)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Sum of squared degrees; equals `|G|` when the census is complete.
pub fn degree_square_sum(multiset: &BTreeMap<Int, u64>) -> Int {
    let mut total = Int::zero();
    for (d, count) in multiset {
        total += d * d * Int::from(*count);
    }
    total
}

/// Aggregates per level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub count: u64,
    pub min_degree: Int,
    pub max_degree: Int,
}

/// Per-level (not true level) statistics over all labels.
pub fn level_statistics(spec: &GroupSpec) -> Result<BTreeMap<u32, LevelStats>> {
    let mut out: BTreeMap<u32, LevelStats> = BTreeMap::new();
    for label in enumerate_labels(spec)? {
        let j = level(&label);
        let d = degree(&label);
        out.entry(j)
            .and_modify(|s| {
                s.count += 1;
                if d < s.min_degree {
                    s.min_degree = d.clone();
                }
                if d > s.max_degree {
                    s.max_degree = d.clone();
                }
            })
            .or_insert_with(|| LevelStats {
                count: 1,
                min_degree: d.clone(),
                max_degree: d,
            });
    }
    Ok(out)
}

/// Multiset of `(degree, true level)` pairs, the cross-check target against
/// the table oracle.
pub fn degree_true_level_multiset(spec: &GroupSpec) -> Result<BTreeMap<(Int, u32), u64>> {
    let mut out = BTreeMap::new();
    for label in enumerate_labels(spec)? {
        let key = (degree(&label), true_level(&label));
        *out.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

/// Class-number ceiling: `k(GL_n(q)) ≤ q^n` and `k(GU_n(q)) ≤ 8.26·q^n`
/// (compared as `100·k ≤ 826·q^n`).
pub fn class_number_bounds_check(spec: &GroupSpec) -> Result<bool> {
    let k = Int::from(enumerate_labels(spec)?.len());
    let qn = Int::from(spec.q).pow(spec.n);
    Ok(match spec.eps {
        crate::gfcore::Sign::Plus => k <= qn,
        crate::gfcore::Sign::Minus => Int::from(100) * k <= Int::from(826) * qn,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl23_degree_multiset() {
        // {1:2, 2:3, 3:2, 4:1} with squares summing to 48.
        let ms = degree_multiset(&GroupSpec::gl(2, 3)).unwrap();
        let expect: BTreeMap<Int, u64> = [
            (Int::from(1), 2),
            (Int::from(2), 3),
            (Int::from(3), 2),
            (Int::from(4), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(ms, expect);
        assert_eq!(degree_square_sum(&ms), Int::from(48));
    }

    #[test]
    fn gl22_degree_multiset() {
        let ms = degree_multiset(&GroupSpec::gl(2, 2)).unwrap();
        let expect: BTreeMap<Int, u64> =
            [(Int::from(1), 2), (Int::from(2), 1)].into_iter().collect();
        assert_eq!(ms, expect);
    }

    #[test]
    fn level_zero_is_linear_characters() {
        for spec in [
            GroupSpec::gl(3, 3),
            GroupSpec::gu(3, 2),
            GroupSpec::gl(4, 2),
        ] {
            let stats = level_statistics(&spec).unwrap();
            let zero = &stats[&0];
            let center = (spec.q as i64 - spec.eps.as_i64()) as u64;
            assert_eq!(zero.count, center, "{}", spec);
            assert_eq!(zero.min_degree, Int::from(1));
            assert_eq!(zero.max_degree, Int::from(1));
        }
    }

    #[test]
    fn steinberg_sits_at_level_n_minus_one() {
        let spec = GroupSpec::gl(3, 2);
        let stats = level_statistics(&spec).unwrap();
        let st = Int::from(spec.q).pow(spec.n * (spec.n - 1) / 2);
        assert!(stats[&(spec.n - 1)].max_degree >= st);
    }

    #[test]
    fn class_number_bounds() {
        assert!(class_number_bounds_check(&GroupSpec::gl(2, 3)).unwrap());
        assert!(class_number_bounds_check(&GroupSpec::gl(3, 2)).unwrap());
        assert!(class_number_bounds_check(&GroupSpec::gu(2, 2)).unwrap());
        assert!(class_number_bounds_check(&GroupSpec::gu(3, 3)).unwrap());
    }
}
