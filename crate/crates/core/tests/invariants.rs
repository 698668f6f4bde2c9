//! Cross-module invariants that tie the label census to the table oracle and
//! the matrix layer: completeness of the census, orbit-class count
//! identities, the rank-changing bijection counts, tensor fixed-space bounds,
//! and the aggregate multiplicity identity for unitary groups.

use charlevel_core::census::{
    class_number, degree_square_sum, degree_true_level_multiset, enumerate_labels,
    orbit_class_counts, orbit_tables,
};
use charlevel_core::gfcore::{
    delta_max_eigenspace, enumerate_group, is_central, kron_fixed_dim, weil_component_value,
    weil_value, GroupSpec, Sign,
};
use charlevel_core::labels::{
    degree, degree_poly, level, theta_forward, theta_inverse, true_level, twist_by_linear,
};
use charlevel_core::oracle::{
    dixon_table, empirical_true_level, tau_power_decompose, tau_self_duality_check,
    weil_class_values,
};
use charlevel_core::rng::SplitMix64;
use charlevel_core::{CharLabel, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[test]
fn census_counts_match_oracle_class_numbers() {
    let specs = [
        GroupSpec::gl(2, 2),
        GroupSpec::gl(2, 3),
        GroupSpec::gl(3, 2),
        GroupSpec::gl(3, 3),
        GroupSpec::gl(4, 2),
        GroupSpec::gu(2, 2),
        GroupSpec::gu(2, 3),
        GroupSpec::gu(3, 2),
        GroupSpec::gu(4, 2),
    ];
    for spec in specs {
        let group = enumerate_group(&spec).unwrap();
        let k = class_number(&spec).unwrap();
        assert_eq!(k, Int::from(group.num_classes() as u64), "{}", spec);
        // Completeness: sum of squared label degrees is the group order.
        let ms = charlevel_core::degree_multiset(&spec).unwrap();
        assert_eq!(degree_square_sum(&ms), spec.order(), "{}", spec);
    }
}

#[test]
fn orbit_class_count_identities() {
    for q in [2u64, 3, 4, 5] {
        for eps in [Sign::Plus, Sign::Minus] {
            let spec = GroupSpec {
                eps,
                n: 2,
                q,
                special: false,
            };
            let counts = orbit_class_counts(&spec, 8);
            assert!(counts.verify_partition_identity(8), "{}", spec);
        }
    }
}

#[test]
fn bijection_counting_between_ranks() {
    // #{labels of rank n with true level j} = #{labels of rank j with true
    // level >= 2j - n}, and the two maps invert each other.
    for q in [2u64, 3] {
        for eps in [Sign::Plus, Sign::Minus] {
            for n in 1..=5u32 {
                let spec = GroupSpec {
                    eps,
                    n,
                    q,
                    special: false,
                };
                let labels = enumerate_labels(&spec).unwrap();
                for j in 0..=n {
                    let sspec = GroupSpec {
                        eps,
                        n: j,
                        q,
                        special: false,
                    };
                    let high: Vec<&CharLabel> =
                        labels.iter().filter(|l| true_level(l) == j).collect();
                    let low: Vec<CharLabel> = if j == 0 {
                        if eps == Sign::Plus && q == 2 {
                            // Rank 0: only the empty label; count it as one.
                            Vec::new()
                        } else {
                            Vec::new()
                        }
                    } else {
                        enumerate_labels(&sspec)
                            .unwrap()
                            .into_iter()
                            .filter(|a| true_level(a) as i64 >= 2 * j as i64 - n as i64)
                            .collect()
                    };
                    if j == 0 {
                        // The unique true-level-0 label is the trivial one.
                        assert_eq!(high.len(), usize::from(n > 0));
                        continue;
                    }
                    assert_eq!(high.len(), low.len(), "{} at level {}", spec, j);
                    // Round trips.
                    for a in &low {
                        let lifted = theta_inverse(a, n).unwrap();
                        assert_eq!(true_level(&lifted), j);
                        assert_eq!(&theta_forward(&lifted).unwrap(), a);
                    }
                    for t in &high {
                        let dropped = theta_forward(t).unwrap();
                        assert_eq!(&theta_inverse(&dropped, n).unwrap(), *t);
                    }
                }
            }
        }
    }
}

#[test]
fn twist_preserves_level_exhaustively() {
    let spec = GroupSpec::gl(2, 3);
    let tables = orbit_tables(&spec, 2).unwrap();
    for label in enumerate_labels(&spec).unwrap() {
        for c in 0..2u32 {
            let t = twist_by_linear(&label, c, Some(&tables)).unwrap();
            assert_eq!(level(&t), level(&label), "{} twisted by {}", label, c);
            assert_eq!(degree(&t), degree(&label));
        }
    }
}

#[test]
fn gl_degree_polys_are_monic_of_combined_b() {
    for q in [2u64] {
        for n in 1..=5u32 {
            let spec = GroupSpec::gl(n, q);
            for label in enumerate_labels(&spec).unwrap() {
                let p = degree_poly(&label);
                assert!(p.is_monic(), "{}", label);
                assert_eq!(
                    p.degree(),
                    Some(label.combined_partition().stats().b as usize),
                    "{}",
                    label
                );
                assert_eq!(p.eval(&Int::from(spec.q)), degree(&label));
            }
        }
    }
}

#[test]
fn weil_components_sum_to_total_on_all_classes() {
    for spec in [GroupSpec::gl(3, 2), GroupSpec::gu(2, 3)] {
        let group = enumerate_group(&spec).unwrap();
        let m = (spec.q as i64 - spec.eps.as_i64()) as u32;
        for c in 0..group.num_classes() {
            let rep = group.class_rep(c);
            let total = Rat::from(weil_value(&spec, rep, &group.field));
            let mut sum = charlevel_core::cyc::CycRat::zero(m.max(1));
            for psi in 0..m {
                sum = sum.add(&weil_component_value(&spec, psi, rep, &group.field));
            }
            assert_eq!(sum.as_rational().unwrap(), total);
        }
    }
}

#[test]
fn independent_tuple_character_identity() {
    // The permutation character on linearly independent j-tuples equals
    // Π_{i<j}(τ - q^i·1) classwise.
    for spec in [
        GroupSpec::gl(2, 2),
        GroupSpec::gl(2, 3),
        GroupSpec::gl(3, 2),
    ] {
        let group = enumerate_group(&spec).unwrap();
        let q = spec.q;
        for c in 0..group.num_classes() {
            let rep = group.class_rep(c);
            let d = rep.fixed_space_dim(&group.field) as u32;
            for j in 1..=spec.n {
                // Fixed independent j-tuples all lie in the fixed subspace,
                // and their count Π(q^d - q^i) vanishes identically once
                // d < j (the i = d factor is zero).
                let mut count = Int::one();
                let mut product = Int::one();
                for i in 0..j {
                    count *= Int::from(q).pow(d) - Int::from(q).pow(i);
                    product *= weil_value(&spec, rep, &group.field) - Int::from(q).pow(i);
                }
                assert_eq!(count, product);
            }
        }
    }
}

#[test]
fn tau_power_self_duality() {
    for spec in [GroupSpec::gl(2, 3), GroupSpec::gu(2, 2)] {
        let group = enumerate_group(&spec).unwrap();
        let table = dixon_table(&group).unwrap();
        let tau = weil_class_values(&group, &table);
        for a in 0..=spec.n {
            for b in 0..=spec.n {
                if a + b <= 2 * spec.n {
                    assert!(tau_self_duality_check(&table, &tau, a, b));
                }
            }
        }
    }
}

#[test]
fn aggregate_multiplicity_for_unitary_groups() {
    // For each j <= n/2: Σ over characters of true level j of [ζ_n^j, χ]
    // equals Σ over rank-j labels with true level >= 2j - n of their degrees.
    let instances = [
        (2u32, 2u64, 1u32),
        (3, 2, 1),
        (2, 3, 1),
        (4, 2, 1),
        (4, 2, 2),
    ];
    for (n, q, j) in instances {
        let spec = GroupSpec::gu(n, q);
        let group = enumerate_group(&spec).unwrap();
        let table = dixon_table(&group).unwrap();
        let tau = weil_class_values(&group, &table);
        let levels = empirical_true_level(&group, &table);
        let mult = tau_power_decompose(&table, &tau, j);
        let lhs: Int = mult
            .iter()
            .zip(levels.iter())
            .filter(|(_, &l)| l == j)
            .map(|(m, _)| m.clone())
            .sum();
        let sspec = GroupSpec::gu(j, q);
        let rhs: Int = enumerate_labels(&sspec)
            .unwrap()
            .iter()
            .filter(|a| true_level(a) as i64 >= 2 * j as i64 - n as i64)
            .map(degree)
            .sum();
        assert_eq!(lhs, rhs, "GU({},{}) at power {}", n, q, j);
    }
}

#[test]
fn tensor_fixed_space_bounds() {
    // Exhaustive scan over GL_2(2) x GL_2(2), random scan over
    // GL_3(3) x GL_2(3): d(g⊗s) <= δ(g)·j always; refined ceilings admit at
    // most one exceptional s per g.
    let small = enumerate_group(&GroupSpec::gl(2, 2)).unwrap();
    let field2 = &small.field;
    for g in &small.elements {
        let dg = delta_max_eigenspace(g, field2);
        let n = 2u32;
        let j = 2u32;
        let mut over_mid = 0;
        let mut over_noncentral = 0;
        for s in &small.elements {
            let d = kron_fixed_dim(g, s, field2);
            assert!(d <= dg * j);
            if 2 * dg >= n && d > dg * (j - 2) + n {
                over_mid += 1;
            }
            if !is_central(g) && d > (n - 1) * (j - 1) + 1 {
                over_noncentral += 1;
                assert!(d <= (n - 1) * j);
            }
        }
        if 2 * dg >= n {
            assert!(over_mid <= 1, "more than one exceptional tensor partner");
        }
        if !is_central(g) {
            assert!(over_noncentral <= 1);
        }
    }

    let big = enumerate_group(&GroupSpec::gl(3, 3)).unwrap();
    let side = enumerate_group(&GroupSpec::gl(2, 3)).unwrap();
    let mut rng = SplitMix64::new(7);
    let n = 3u32;
    let j = 2u32;
    for _ in 0..150 {
        let g = &big.elements[rng.below(big.order()) as usize];
        let dg = delta_max_eigenspace(g, &big.field);
        let mut over_mid = 0;
        let mut over_noncentral = 0;
        for s in &side.elements {
            let d = kron_fixed_dim(g, s, &big.field);
            assert!(d <= dg * j);
            if 2 * dg >= n && d > dg * (j - 2) + n {
                over_mid += 1;
            }
            if !is_central(g) && d > (n - 1) * (j - 1) + 1 {
                over_noncentral += 1;
                assert!(d <= (n - 1) * j);
            }
        }
        if 2 * dg >= n {
            assert!(over_mid <= 1);
        }
        if !is_central(g) {
            assert!(over_noncentral <= 1);
        }
    }
}

#[test]
fn level_statistics_shape() {
    // Level-1 characters of the full linear group: the census agrees with
    // the empirical filtration on the degree window.
    let spec = GroupSpec::gl(3, 3);
    let stats = charlevel_core::level_statistics(&spec).unwrap();
    let one = &stats[&1];
    // Weil characters sit around q^{n-1}; the degree-level window keeps
    // first-level degrees between roughly q^{n-1} and q^n.
    assert!(one.min_degree >= Int::from(spec.q).pow(spec.n - 1) - Int::from(spec.q));
    assert!(one.max_degree <= Int::from(spec.q).pow(spec.n));
    // Cross-check the degree/true-level multiset against the oracle.
    let group = enumerate_group(&spec).unwrap();
    let table = dixon_table(&group).unwrap();
    let levels = empirical_true_level(&group, &table);
    let mut from_table: BTreeMap<(Int, u32), u64> = BTreeMap::new();
    for (row, &l) in table.chars.iter().zip(levels.iter()) {
        *from_table.entry((row.degree.clone(), l)).or_insert(0) += 1;
    }
    assert_eq!(from_table, degree_true_level_multiset(&spec).unwrap());
}

#[test]
fn mixing_bounds_dominate_exact_walk_norms() {
    use charlevel_core::bounds::{mixing_bound, WalkNorm};
    use charlevel_core::oracle::random_walk;
    // Jointly defined instances: the zeta exponent must exceed 2/n, which
    // for rank 2 means t >= 28 (sup norm) and t >= 14 (squared 1-norm).
    for spec in [GroupSpec::sl(2, 3), GroupSpec::sl(2, 4)] {
        let group = enumerate_group(&spec).unwrap();
        let table = dixon_table(&group).unwrap();
        let degrees = table.degrees_multiset();
        for class in 0..table.num_classes() {
            if table.class_sizes[class] == 1 {
                continue;
            }
            for t in [28u32, 36] {
                let walk = random_walk(&table, class, t).unwrap();
                let bound = mixing_bound(&degrees, spec.n, t, WalkNorm::SupScaled).unwrap();
                assert!(
                    walk.linf <= bound.lo,
                    "{} class {} t={}: sup-norm bound violated",
                    spec,
                    class,
                    t
                );
            }
            for t in [14u32, 20] {
                let walk = random_walk(&table, class, t).unwrap();
                let bound = mixing_bound(&degrees, spec.n, t, WalkNorm::L1Squared).unwrap();
                assert!(
                    &walk.l1 * &walk.l1 <= bound.lo,
                    "{} class {} t={}: 1-norm bound violated",
                    spec,
                    class,
                    t
                );
            }
        }
    }
}

#[test]
fn weil_components_decompose_integrally_against_tables() {
    // Each centre-graded component of the total Weil character is a genuine
    // character: nonnegative integer multiplicities against the table, and
    // the per-row multiplicities summed over the grading match the
    // decomposition of the total.
    for spec in [GroupSpec::gu(2, 2), GroupSpec::gl(2, 3)] {
        let group = enumerate_group(&spec).unwrap();
        let table = dixon_table(&group).unwrap();
        let m = (spec.q as i64 - spec.eps.as_i64()) as u32;
        let e = table.exponent as u32;
        let order = Int::from(table.order);
        let mut summed = vec![Int::zero(); table.num_chars()];
        for psi in 0..m {
            for (i, row) in table.chars.iter().enumerate() {
                let mut acc = charlevel_core::cyc::CycRat::zero(e);
                for c in 0..table.num_classes() {
                    let rep = &table.class_reps[c];
                    let v = weil_component_value(&spec, psi, rep, &group.field);
                    let conj = row.values[table.inverse_class[c] as usize]
                        .embed(e)
                        .scale(&Int::from(table.class_sizes[c]));
                    let v = charlevel_core::cyc::CycRat::new(v.num.embed(e), v.den.clone());
                    acc = acc.add(&v.mul(&charlevel_core::cyc::CycRat::from_cyc(conj)));
                }
                let mult = acc
                    .scale_rat(&Rat::new(Int::one(), order.clone()))
                    .as_rational()
                    .expect("component multiplicities are rational");
                assert!(mult.denom().is_one(), "integral multiplicity for {}", spec);
                assert!(!mult.numer().is_negative(), "component is a character");
                summed[i] += mult.to_integer();
            }
        }
        // Sum over the grading = multiplicities of the total Weil character.
        let tau = weil_class_values(&group, &table);
        let total = tau_power_decompose(&table, &tau, 1);
        assert_eq!(summed, total, "{}", spec);
    }
}
