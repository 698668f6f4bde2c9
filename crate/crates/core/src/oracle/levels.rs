//! Empirical levels from powers of the total Weil character.
//!
//! The total Weil character is an integer-valued class function, so the
//! multiplicity `[τ^j, χ]` is an exact integer computed classwise. The
//! empirical true level of `χ` is the least `j ≤ n` with a nonzero
//! multiplicity; the empirical level allows a preliminary twist by any
//! degree-one row of the table.

use super::dixon::CharTable;
use crate::cyc::Cyc;
use crate::error::{Error, Result};
use crate::gfcore::{weil_value_from_dim, GroupData, Sign};
use crate::Int;
use num_traits::Zero;

/// Per-class values of the total Weil character.
pub fn weil_class_values(group: &GroupData, table: &CharTable) -> Vec<Int> {
    (0..table.num_classes())
        .map(|c| {
            let d = table.class_reps[c].fixed_space_dim(&group.field) as u32;
            weil_value_from_dim(&table.spec.general(), d)
        })
        .collect()
}

/// Multiplicities `[τ^j, χ_i]` for all rows `i`; exact nonnegative integers.
pub fn tau_power_decompose(table: &CharTable, tau: &[Int], j: u32) -> Vec<Int> {
    let powers: Vec<Int> = tau.iter().map(|t| t.pow(j)).collect();
    (0..table.num_chars())
        .map(|i| {
            let mut acc = Cyc::zero(table.exponent as u32);
            for c in 0..table.num_classes() {
                let v = table.chars[i].values[table.inverse_class[c] as usize]
                    .scale(&(&powers[c] * Int::from(table.class_sizes[c])));
                acc = acc.add(&v);
            }
            let m = acc
                .exact_div_int(&Int::from(table.order))
                .and_then(|c| c.as_int())
                .expect("multiplicity is a rational integer");
            assert!(m >= Int::zero(), "multiplicity in a true character power");
            m
        })
        .collect()
}

/// `[τ^j, χ_i · λ]` where `λ` is the `lin`-th row (degree one).
fn twisted_multiplicity(table: &CharTable, tau: &[Int], j: u32, chi: usize, lin: usize) -> Int {
    let powers: Vec<Int> = tau.iter().map(|t| t.pow(j)).collect();
    let mut acc = Cyc::zero(table.exponent as u32);
    for c in 0..table.num_classes() {
        let ci = table.inverse_class[c] as usize;
        let prod = table.chars[chi].values[ci].mul(&table.chars[lin].values[ci]);
        acc = acc.add(&prod.scale(&(&powers[c] * Int::from(table.class_sizes[c]))));
    }
    acc.exact_div_int(&Int::from(table.order))
        .and_then(|c| c.as_int())
        .expect("multiplicity is a rational integer")
}

/// Smallest `j ≤ n` with `[τ^j, χ] ≠ 0`, for every row.
pub fn empirical_true_level(group: &GroupData, table: &CharTable) -> Vec<u32> {
    let tau = weil_class_values(group, table);
    let n = table.spec.n;
    let mut out = vec![u32::MAX; table.num_chars()];
    for j in 0..=n {
        let mult = tau_power_decompose(table, &tau, j);
        for (i, m) in mult.iter().enumerate() {
            if out[i] == u32::MAX && !m.is_zero() {
                out[i] = j;
            }
        }
    }
    assert!(
        out.iter().all(|&l| l <= n),
        "every character appears within n Weil powers"
    );
    out
}

/// The `q − ε` determinant-type linear rows: degree-one characters whose
/// value is a function of the determinant alone. (Rank-2 groups over F_2 own
/// extra degree-one characters because their determinant-one subgroups are
/// not perfect; those are not twists and are excluded here.)
pub fn det_type_linear_rows(group: &GroupData, table: &CharTable) -> Vec<usize> {
    assert!(
        !table.spec.special,
        "determinant-type twists live on the general groups; subgroup levels \
         come from the restricted filtration instead"
    );
    let dets: Vec<u32> = (0..table.num_classes())
        .map(|c| table.class_reps[c].det(&group.field))
        .collect();
    let rows: Vec<usize> = table
        .linear_rows()
        .into_iter()
        .filter(|&row| {
            for c1 in 0..table.num_classes() {
                for c2 in c1 + 1..table.num_classes() {
                    if dets[c1] == dets[c2]
                        && !table.chars[row].values[c1].equals(&table.chars[row].values[c2])
                    {
                        return false;
                    }
                }
            }
            true
        })
        .collect();
    let center = (table.spec.q as i64 - table.spec.eps.as_i64()) as usize;
    assert_eq!(
        rows.len(),
        center,
        "determinant-type characters number q - eps"
    );
    rows
}

/// Smallest `j ≤ n` such that some determinant-type linear twist of the row
/// appears in `τ^j`.
pub fn empirical_level(group: &GroupData, table: &CharTable) -> Vec<u32> {
    let tau = weil_class_values(group, table);
    let n = table.spec.n;
    let linear = det_type_linear_rows(group, table);
    let mut out = vec![u32::MAX; table.num_chars()];
    for j in 0..=n {
        for i in 0..table.num_chars() {
            if out[i] != u32::MAX {
                continue;
            }
            if linear
                .iter()
                .any(|&l| !twisted_multiplicity(table, &tau, j, i, l).is_zero())
            {
                out[i] = j;
            }
        }
    }
    assert!(out.iter().all(|&l| l <= n));
    out
}

/// Unitary parity: `[ζ^i · ζ^j, 1] = 0` whenever `i + j ≤ n` is odd. (The
/// vanishing genuinely stops at `n`: rank-2 unitary groups already have
/// `[ζ^3, 1] ≠ 0`.)
pub fn parity_check(group: &GroupData, table: &CharTable) -> Result<bool> {
    if table.spec.eps != Sign::Minus {
        return Err(Error::InvalidInput(
            "the parity phenomenon concerns unitary groups".into(),
        ));
    }
    let tau = weil_class_values(group, table);
    let n = table.spec.n;
    for total in (1..=n).step_by(2) {
        // [ζ^i ζ^j, 1] depends only on i + j; check it vanishes.
        if !inner_with_trivial(table, &tau, total).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[τ^m, 1]` as an exact integer.
pub fn inner_with_trivial(table: &CharTable, tau: &[Int], m: u32) -> Int {
    let mut acc = Int::zero();
    for c in 0..table.num_classes() {
        acc += tau[c].pow(m) * Int::from(table.class_sizes[c]);
    }
    let (v, r) = num_integer::Integer::div_rem(&acc, &Int::from(table.order));
    assert!(r.is_zero(), "orbit count is an integer");
    v
}

/// `[τ^a, τ^b] = [τ^{a+b}, 1]` since the total Weil character is real.
pub fn tau_self_duality_check(table: &CharTable, tau: &[Int], a: u32, b: u32) -> bool {
    let mut lhs = Int::zero();
    for c in 0..table.num_classes() {
        lhs += tau[c].pow(a)
            * tau[table.inverse_class[c] as usize].pow(b)
            * Int::from(table.class_sizes[c]);
    }
    let (v, r) = num_integer::Integer::div_rem(&lhs, &Int::from(table.order));
    assert!(r.is_zero());
    v == inner_with_trivial(table, tau, a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::{enumerate_group, GroupSpec};
    use crate::oracle::dixon_table;

    #[test]
    fn gl23_true_levels() {
        let group = enumerate_group(&GroupSpec::gl(2, 3)).unwrap();
        let table = dixon_table(&group).unwrap();
        let levels = empirical_true_level(&group, &table);
        let tau = weil_class_values(&group, &table);
        // Trivial character has level 0; the Steinberg row (degree 3 with
        // [τ^1, χ] ≠ 0) has true level 1 = n - 1.
        let mut pairs: Vec<(u64, u32)> = table
            .chars
            .iter()
            .zip(levels.iter())
            .map(|(r, &l)| (num_traits::ToPrimitive::to_u64(&r.degree).unwrap(), l))
            .collect();
        pairs.sort();
        assert!(pairs.contains(&(1, 0)));
        assert!(pairs.contains(&(3, 1)));
        // Orbit counts: [τ^1, 1] = 2, [τ^2, 1] = q + 3.
        assert_eq!(inner_with_trivial(&table, &tau, 1), Int::from(2));
        assert_eq!(inner_with_trivial(&table, &tau, 2), Int::from(6));
    }

    #[test]
    fn levels_bounded_by_true_levels() {
        let group = enumerate_group(&GroupSpec::gl(2, 3)).unwrap();
        let table = dixon_table(&group).unwrap();
        let tl = empirical_true_level(&group, &table);
        let l = empirical_level(&group, &table);
        for i in 0..table.num_chars() {
            assert!(l[i] <= tl[i]);
        }
    }

    #[test]
    fn gu22_parity_and_first_power() {
        let group = enumerate_group(&GroupSpec::gu(2, 2)).unwrap();
        let table = dixon_table(&group).unwrap();
        assert!(parity_check(&group, &table).unwrap());
        let tau = weil_class_values(&group, &table);
        assert_eq!(inner_with_trivial(&table, &tau, 1), Int::zero());
        assert_eq!(inner_with_trivial(&table, &tau, 2), Int::from(3));
        assert!(tau_self_duality_check(&table, &tau, 1, 1));
    }
}
