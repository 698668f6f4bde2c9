//! Commutator measures and exact class random walks.
//!
//! For a class `C = g^G`, the distribution of a product of `t` uniform
//! `C`-elements is computed through the Fourier expansion of the class sum,
//! giving exact rational probabilities. The Diaconis-Shahshahani quantity
//! `Σ_{χ≠1} (|χ(g)|/χ(1))^{2t} χ(1)²` is Galois-invariant, hence an exact
//! rational as well.

use super::dixon::CharTable;
use crate::cyc::CycRat;
use crate::error::{Error, Result};
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};

/// `μ(g) = Σ_χ χ(g)/χ(1)` per class; positive everywhere exactly when every
/// element is a commutator.
pub fn mu_commutator(table: &CharTable) -> Vec<Rat> {
    let e = table.exponent as u32;
    (0..table.num_classes())
        .map(|c| {
            let mut acc = CycRat::zero(e);
            for row in &table.chars {
                acc = acc.add(&CycRat::new(row.values[c].clone(), row.degree.clone()));
            }
            acc.as_rational()
                .expect("commutator measure is rational by Galois stability")
        })
        .collect()
}

/// Walk report at time `t`: `‖P^t − U‖_∞` (scaled by `|G|`), `‖P^t − U‖_1`,
/// and the Diaconis-Shahshahani bound on the squared 1-norm.
#[derive(Clone, Debug)]
pub struct WalkReport {
    pub t: u32,
    pub linf: Rat,
    pub l1: Rat,
    pub ds_bound: Rat,
    pub row_sum: Rat,
}

/// Exact random-walk analysis for the class with index `class`.
pub fn random_walk(table: &CharTable, class: usize, t: u32) -> Result<WalkReport> {
    if t == 0 {
        return Err(Error::InvalidInput("walk length must be positive".into()));
    }
    if class >= table.num_classes() {
        return Err(Error::InvalidInput(format!(
            "class index {} out of range",
            class
        )));
    }
    let e = table.exponent as u32;
    let order = Rat::from(Int::from(table.order));

    // P^t(x) = (1/|G|) Σ_χ χ(1)² (χ(g)/χ(1))^t · χ(x^{-1})/χ(1).
    let mut probs: Vec<Rat> = Vec::with_capacity(table.num_classes());
    for x in 0..table.num_classes() {
        let mut acc = CycRat::zero(e);
        for row in &table.chars {
            // χ(g)^t · χ(x^{-1}) / χ(1)^{t-1}
            let num = row.values[class]
                .pow(t as u64)
                .mul(&row.values[table.inverse_class[x] as usize]);
            let den = row.degree.pow(t - 1);
            acc = acc.add(&CycRat::new(num, den));
        }
        let v = acc.as_rational().expect("walk probabilities are rational") / order.clone();
        probs.push(v);
    }

    // Probabilities are nonnegative and class-weighted sums give 1.
    let mut row_sum = Rat::zero();
    for (x, p) in probs.iter().enumerate() {
        assert!(!p.is_negative(), "negative probability: internal defect");
        row_sum += p * Rat::from(Int::from(table.class_sizes[x]));
    }

    let uniform = Rat::new(Int::one(), Int::from(table.order));
    let mut linf = Rat::zero();
    let mut l1 = Rat::zero();
    for (x, p) in probs.iter().enumerate() {
        let dev = (p - &uniform).abs();
        let scaled = &dev * &order;
        if scaled > linf {
            linf = scaled;
        }
        l1 += dev * Rat::from(Int::from(table.class_sizes[x]));
    }

    // DS bound: Σ_{χ≠1} (|χ(g)|²)^t / χ(1)^{2t-2}.
    let mut ds = CycRat::zero(e);
    let trivial = trivial_row(table);
    for (i, row) in table.chars.iter().enumerate() {
        if i == trivial {
            continue;
        }
        let num = row.values[class].abs_sq().pow(t as u64);
        let den = row.degree.pow(2 * t - 2);
        ds = ds.add(&CycRat::new(num, den));
    }
    let ds_bound = ds
        .as_rational()
        .expect("the Diaconis-Shahshahani sum is Galois-invariant, hence rational");

    Ok(WalkReport {
        t,
        linf,
        l1,
        ds_bound,
        row_sum,
    })
}

fn trivial_row(table: &CharTable) -> usize {
    let id = table.identity_class();
    table
        .chars
        .iter()
        .position(|r| {
            r.degree.is_one() && (0..table.num_classes()).all(|c| r.values[c].equals(&r.values[id]))
        })
        .expect("trivial character is in the table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::{enumerate_group, GroupSpec};
    use crate::oracle::dixon_table;

    #[test]
    fn sl23_walk_basics() {
        let group = enumerate_group(&GroupSpec::sl(2, 3)).unwrap();
        let table = dixon_table(&group).unwrap();
        // Any noncentral class.
        let class = (0..table.num_classes())
            .find(|&c| table.class_sizes[c] > 1)
            .unwrap();
        let mut last_linf: Option<Rat> = None;
        for t in 1..=6 {
            let rep = random_walk(&table, class, t).unwrap();
            assert_eq!(rep.row_sum, Rat::one(), "probabilities sum to one");
            assert!(
                &rep.l1 * &rep.l1 <= rep.ds_bound,
                "squared 1-norm below the DS bound"
            );
            if t >= 4 {
                if let Some(prev) = &last_linf {
                    assert!(
                        rep.linf <= prev.clone(),
                        "sup distance shrinks along the walk"
                    );
                }
                last_linf = Some(rep.linf.clone());
            }
        }
    }

    #[test]
    fn mu_positive_on_simple_group() {
        // SL_2(4) is simple: every element is a commutator.
        let group = enumerate_group(&GroupSpec::sl(2, 4)).unwrap();
        let table = dixon_table(&group).unwrap();
        for v in mu_commutator(&table) {
            assert!(v.is_positive());
        }
    }

    #[test]
    fn mu_at_identity_is_class_count() {
        let group = enumerate_group(&GroupSpec::sl(2, 3)).unwrap();
        let table = dixon_table(&group).unwrap();
        let mu = mu_commutator(&table);
        let id = table.identity_class();
        assert_eq!(mu[id], Rat::from(Int::from(table.num_chars() as u64)));
        for v in &mu {
            // Galois-stable sums are rational; nothing more to assert here
            // beyond exactness, which the type already guarantees.
            let _ = v;
        }
    }
}
