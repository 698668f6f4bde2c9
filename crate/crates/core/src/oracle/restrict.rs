//! Restriction from the general group to its determinant-one subgroup.
//!
//! Characters of the subgroup get their level through restriction of the
//! Weil power filtration; characters of the overgroup with level below `n/2`
//! restrict irreducibly, and non-extendible subgroup characters obey the
//! quarter-square degree bound.

use super::dixon::CharTable;
use super::levels::empirical_level;
use crate::cyc::Cyc;
use crate::error::{Error, Result};
use crate::gfcore::{weil_value_from_dim, GroupData};
use crate::Int;
use num_traits::{One, Signed, Zero};

/// Outcome of the restriction analysis.
pub struct RestrictionReport {
    /// For each row of the overgroup table: indices and multiplicities of the
    /// subgroup constituents of its restriction.
    pub constituents: Vec<Vec<(usize, Int)>>,
    /// Empirical level of every subgroup character via the restricted Weil
    /// filtration.
    pub sub_levels: Vec<u32>,
    /// Empirical level of every overgroup character.
    pub over_levels: Vec<u32>,
}

/// Decompose every restriction `χ|_S` and compute levels on both sides.
pub fn restriction_check_sl(
    group_g: &GroupData,
    table_g: &CharTable,
    group_s: &GroupData,
    table_s: &CharTable,
) -> Result<RestrictionReport> {
    if !table_s.spec.special
        || table_s.spec.general() != table_g.spec
        || group_s.spec != table_s.spec
    {
        return Err(Error::InvalidInput(
            "restriction expects a general group and its determinant-one subgroup".into(),
        ));
    }
    // Class of each subgroup representative inside the overgroup.
    let fusion: Vec<usize> = (0..table_s.num_classes())
        .map(|c| {
            group_g
                .class_of_matrix(&table_s.class_reps[c])
                .expect("subgroup elements live in the overgroup") as usize
        })
        .collect();

    let e = lcm_u64(table_g.exponent, table_s.exponent) as u32;
    let order_s = Int::from(table_s.order);

    let mut constituents = Vec::with_capacity(table_g.num_chars());
    for row in &table_g.chars {
        let mut per = Vec::new();
        for (si, srow) in table_s.chars.iter().enumerate() {
            let mut acc = Cyc::zero(e);
            for cs in 0..table_s.num_classes() {
                let g_val = row.values[fusion[table_s.inverse_class[cs] as usize]].embed(e);
                let s_val = srow.values[cs].embed(e);
                acc = acc.add(&g_val.mul(&s_val).scale(&Int::from(table_s.class_sizes[cs])));
            }
            let m = acc
                .exact_div_int(&order_s)
                .and_then(|c| c.as_int())
                .expect("restriction multiplicity is an integer");
            assert!(!m.is_negative());
            if !m.is_zero() {
                per.push((si, m));
            }
        }
        constituents.push(per);
    }

    // Subgroup levels: smallest j with [(τ^j)|_S, φ] ≠ 0.
    let tau_s: Vec<Int> = (0..table_s.num_classes())
        .map(|c| {
            let d = table_s.class_reps[c].fixed_space_dim(&group_s.field) as u32;
            weil_value_from_dim(&table_s.spec.general(), d)
        })
        .collect();
    let n = table_s.spec.n;
    let mut sub_levels = vec![u32::MAX; table_s.num_chars()];
    for j in 0..=n {
        for (si, srow) in table_s.chars.iter().enumerate() {
            if sub_levels[si] != u32::MAX {
                continue;
            }
            let mut acc = Cyc::zero(table_s.exponent as u32);
            for cs in 0..table_s.num_classes() {
                let v = srow.values[table_s.inverse_class[cs] as usize]
                    .scale(&(tau_s[cs].pow(j) * Int::from(table_s.class_sizes[cs])));
                acc = acc.add(&v);
            }
            let m = acc
                .exact_div_int(&order_s)
                .and_then(|c| c.as_int())
                .expect("multiplicity is an integer");
            if !m.is_zero() {
                sub_levels[si] = j;
            }
        }
    }
    if sub_levels.iter().any(|&l| l == u32::MAX) {
        return Err(Error::InvalidInput(
            "a subgroup character escaped the Weil filtration: internal defect".into(),
        ));
    }

    let over_levels = empirical_level(group_g, table_g);

    Ok(RestrictionReport {
        constituents,
        sub_levels,
        over_levels,
    })
}

impl RestrictionReport {
    /// Restriction of a low-level overgroup character is irreducible:
    /// exactly one constituent, multiplicity one.
    pub fn low_level_restrictions_irreducible(&self, n: u32) -> bool {
        self.over_levels
            .iter()
            .zip(self.constituents.iter())
            .filter(|(&l, _)| 2 * l < n)
            .all(|(_, cons)| cons.len() == 1 && cons[0].1.is_one())
    }

    /// Indices of subgroup characters that do not extend to the overgroup:
    /// exactly those appearing in a reducible restriction. The caller checks
    /// the quarter-square degree bound on these with exact arithmetic.
    pub fn non_extendible(&self) -> Vec<usize> {
        let mut flags = vec![false; self.sub_levels.len()];
        for cons in &self.constituents {
            if cons.len() > 1 || cons.iter().any(|(_, m)| !m.is_one()) {
                for (si, _) in cons {
                    flags[*si] = true;
                }
            }
        }
        flags
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(i, _)| i)
            .collect()
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    num_integer::Integer::lcm(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::{enumerate_group, GroupSpec};
    use crate::oracle::dixon_table;

    #[test]
    fn sl23_under_gl23() {
        let gg = enumerate_group(&GroupSpec::gl(2, 3)).unwrap();
        let tg = dixon_table(&gg).unwrap();
        let gs = enumerate_group(&GroupSpec::sl(2, 3)).unwrap();
        let ts = dixon_table(&gs).unwrap();
        let rep = restriction_check_sl(&gg, &tg, &gs, &ts).unwrap();
        // Restriction degrees add up.
        for (gi, cons) in rep.constituents.iter().enumerate() {
            let total: Int = cons.iter().map(|(si, m)| m * &ts.chars[*si].degree).sum();
            assert_eq!(total, tg.chars[gi].degree, "degree of restriction");
        }
        // Every subgroup character appears under something.
        let mut seen = vec![false; ts.num_chars()];
        for cons in &rep.constituents {
            for (si, _) in cons {
                seen[*si] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert!(rep.low_level_restrictions_irreducible(2));
    }
}
