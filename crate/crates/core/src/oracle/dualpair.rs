//! Dual-pair decomposition: the total Weil character of the tensor product
//! module, restricted to `G × S`, decomposed against both character tables.
//!
//! `D_α(g) = (1/|S|) Σ_{s ∈ S} τ(g ⊗ s) · conj(α(s))`, evaluated classwise
//! with tensor-product kernel dimensions; the value of `τ` at `g ⊗ s` is
//! `ε^{nj} (εq)^{dim Ker(g⊗s − 1)}`.

use super::dixon::CharTable;
use crate::cyc::{Cyc, CycRat};
use crate::error::{Error, Result};
use crate::gfcore::{kron_fixed_dim, weil_value_from_dim, GroupData, GroupSpec};
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};

/// The decomposition data: per-`α` class functions on `G` and their
/// multiplicity rows against `Irr(G)`.
pub struct DualPairDecomposition {
    pub spec_g: GroupSpec,
    pub spec_s: GroupSpec,
    /// `tau[cg][cs]`: value of the tensor-module Weil character at the class
    /// pair.
    pub tau: Vec<Vec<Int>>,
    /// `values[α][cg]`: the class function `D_α` on `G`.
    pub values: Vec<Vec<CycRat>>,
    /// `mults[α][θ]`: integer multiplicities `[D_α, θ]_G`.
    pub mults: Vec<Vec<Int>>,
}

pub fn dual_pair_decompose(
    group_g: &GroupData,
    table_g: &CharTable,
    table_s: &CharTable,
) -> Result<DualPairDecomposition> {
    let spec_g = table_g.spec;
    let spec_s = table_s.spec;
    if spec_g.eps != spec_s.eps || spec_g.q != spec_s.q || spec_g.special || spec_s.special {
        return Err(Error::InvalidInput(
            "dual pairs take two general groups of the same kind and field".into(),
        ));
    }
    let n = spec_g.n;
    let j = spec_s.n;
    let tensor_spec = GroupSpec {
        eps: spec_g.eps,
        n: n * j,
        q: spec_g.q,
        special: false,
    };

    // τ(g ⊗ s) per class pair.
    let kg = table_g.num_classes();
    let ks = table_s.num_classes();
    let mut tau = vec![vec![Int::zero(); ks]; kg];
    for cg in 0..kg {
        let g = &table_g.class_reps[cg];
        for cs in 0..ks {
            let s = &table_s.class_reps[cs];
            let d = kron_fixed_dim(g, s, &group_g.field);
            tau[cg][cs] = weil_value_from_dim(&tensor_spec, d);
        }
    }

    let order_s = Int::from(table_s.order);
    let e = (table_g.exponent.lcm(&table_s.exponent)) as u32;
    let mut values: Vec<Vec<CycRat>> = Vec::with_capacity(table_s.num_chars());
    for alpha in 0..table_s.num_chars() {
        let mut per_class = Vec::with_capacity(kg);
        for cg in 0..kg {
            let mut acc = Cyc::zero(e);
            for cs in 0..ks {
                let weight = Int::from(table_s.class_sizes[cs]);
                let a_bar = table_s.chars[alpha].values[cs].conj().embed(e);
                acc = acc.add(&a_bar.scale(&(&tau[cg][cs] * &weight)));
            }
            per_class.push(CycRat::new(acc, order_s.clone()));
        }
        values.push(per_class);
    }

    // Decompose each D_α against Irr(G); entries must come out integral.
    let order_g = Int::from(table_g.order);
    let mut mults = Vec::with_capacity(values.len());
    for per_class in &values {
        let mut row = Vec::with_capacity(table_g.num_chars());
        for theta in 0..table_g.num_chars() {
            let mut acc = CycRat::zero(e);
            for cg in 0..kg {
                let th = table_g.chars[theta].values[table_g.inverse_class[cg] as usize]
                    .embed(e)
                    .scale(&Int::from(table_g.class_sizes[cg]));
                acc = acc.add(&per_class[cg].mul(&CycRat::from_cyc(th)));
            }
            let m = acc
                .scale_rat(&Rat::new(Int::one(), order_g.clone()))
                .as_rational()
                .expect("dual-pair multiplicity is rational");
            if !m.denom().is_one() {
                return Err(Error::InvalidInput(
                    "dual-pair multiplicity is not an integer: internal defect".into(),
                ));
            }
            row.push(m.to_integer());
        }
        mults.push(row);
    }

    Ok(DualPairDecomposition {
        spec_g,
        spec_s,
        tau,
        values,
        mults,
    })
}

impl DualPairDecomposition {
    /// Isotypic completeness: `Σ_α α(1)·D_α(g) = τ(g ⊗ 1_S)` for every class
    /// of `G`.
    pub fn completeness_check(&self, table_g: &CharTable, table_s: &CharTable) -> bool {
        let id_s = table_s.identity_class();
        let kg = table_g.num_classes();
        for cg in 0..kg {
            let e = self.values[0][cg].num.order();
            let mut acc = CycRat::zero(e);
            for (alpha, per_class) in self.values.iter().enumerate() {
                let deg = table_s.chars[alpha].degree.clone();
                acc = acc.add(&per_class[cg].scale_rat(&Rat::from(deg)));
            }
            let expected = Rat::from(self.tau[cg][id_s].clone());
            match acc.as_rational() {
                Some(v) if v == expected => {}
                _ => return false,
            }
        }
        true
    }
}
