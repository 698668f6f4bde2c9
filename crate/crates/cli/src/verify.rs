//! Verification suites callable from the command line.
//!
//! Each suite re-runs a cross-check from the library at command-line scale
//! and reports pass/fail with witnesses; `all` runs the full battery. The
//! exit-code contract is handled by the caller: nonzero failures map to 1.

use charlevel_core::bounds::{
    gu_power_inner, inequality_suite, known_suites, orbit_bounds_check, orbit_formula,
    pencil_big_f, pencil_bounds_check, ThresholdCalc,
};
use charlevel_core::census::{degree_true_level_multiset, enumerate_labels};
use charlevel_core::gfcore::{
    enumerate_group, pencil_orbit_oracle, tuple_orbit_count, GroupData, GroupSpec, Sign,
};
use charlevel_core::labels::{degree, theta_inverse, true_level};
use charlevel_core::oracle::{
    dixon_table, dual_pair_decompose, empirical_true_level, inner_with_trivial, mu_commutator,
    parity_check, random_walk, weil_class_values, CharTable,
};
use charlevel_core::qcomb::{
    abelian_subgroup_oracle, hall_elementary_sum, partitions_of, z_identity_check,
};
use charlevel_core::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub struct SuiteOutcome {
    pub instances: u64,
    pub failures: Vec<String>,
}

fn group(spec: GroupSpec) -> Result<GroupData, String> {
    enumerate_group(&spec).map_err(|e| e.to_string())
}

fn table_of(spec: GroupSpec) -> Result<(GroupData, CharTable), String> {
    let g = group(spec)?;
    let t = dixon_table(&g).map_err(|e| e.to_string())?;
    Ok((g, t))
}

pub fn available() -> Vec<&'static str> {
    let mut v = vec![
        "z-identity",
        "hall-sum",
        "orbit-counts",
        "degree-multiset",
        "level-multiset",
        "gu-inner",
        "dual-pair",
        "weil-bounds",
        "pencil",
        "walks",
        "thresholds",
    ];
    v.extend(known_suites());
    v
}

pub fn run(name: &str, spec: Option<GroupSpec>, seed: u64) -> Result<SuiteOutcome, String> {
    match name {
        "z-identity" => {
            let failures: Vec<String> = (0..=8)
                .filter(|&m| !z_identity_check(m))
                .map(|m| format!("identity fails at m={}", m))
                .collect();
            Ok(SuiteOutcome {
                instances: 9,
                failures,
            })
        }
        "hall-sum" => {
            let mut instances = 0;
            let mut failures = Vec::new();
            for n in 1..=6u32 {
                for lam in partitions_of(n) {
                    for j in 1..=4u32 {
                        for r in [2u32, 3] {
                            instances += 1;
                            let oracle =
                                abelian_subgroup_oracle(&lam, j, r).map_err(|e| e.to_string())?;
                            if hall_elementary_sum(&lam, j, &Int::from(r)) != Int::from(oracle) {
                                failures.push(format!("λ={} j={} r={}", lam, j, r));
                            }
                        }
                    }
                }
            }
            Ok(SuiteOutcome {
                instances,
                failures,
            })
        }
        "orbit-counts" => {
            let mut instances = 0;
            let mut failures = Vec::new();
            for n in [2u32, 3] {
                for q in [2u64, 3] {
                    let g = group(GroupSpec::gl(n, q))?;
                    for j in 1..=3u32.min(n) {
                        instances += 1;
                        let oracle = tuple_orbit_count(&g, j);
                        if oracle != orbit_formula(Sign::Plus, j, q)
                            || !orbit_bounds_check(Sign::Plus, j, q, &oracle)
                        {
                            failures.push(format!("GL({},{}) j={}", n, q, j));
                        }
                    }
                }
            }
            for (n, q) in [(2u32, 2u64), (2, 3), (3, 2), (4, 2)] {
                let g = group(GroupSpec::gu(n, q))?;
                for j in 1..=n / 2 {
                    instances += 1;
                    let oracle = tuple_orbit_count(&g, j);
                    if oracle != orbit_formula(Sign::Minus, j, q)
                        || !orbit_bounds_check(Sign::Minus, j, q, &oracle)
                    {
                        failures.push(format!("GU({},{}) j={}", n, q, j));
                    }
                }
            }
            Ok(SuiteOutcome {
                instances,
                failures,
            })
        }
        "degree-multiset" => {
            let spec = spec.ok_or("degree-multiset needs --group")?;
            let (_g, t) = table_of(spec)?;
            let from_labels = charlevel_core::degree_multiset(&spec).map_err(|e| e.to_string())?;
            let from_table = t.degrees_multiset();
            let failures = if from_labels == from_table {
                Vec::new()
            } else {
                vec![format!(
                    "census {:?} differs from table {:?}",
                    from_labels, from_table
                )]
            };
            Ok(SuiteOutcome {
                instances: 1,
                failures,
            })
        }
        "level-multiset" => {
            let spec = spec.ok_or("level-multiset needs --group")?;
            let (g, t) = table_of(spec)?;
            let levels = empirical_true_level(&g, &t);
            let mut from_table: BTreeMap<(Int, u32), u64> = BTreeMap::new();
            for (row, &l) in t.chars.iter().zip(levels.iter()) {
                *from_table.entry((row.degree.clone(), l)).or_insert(0) += 1;
            }
            let from_labels = degree_true_level_multiset(&spec).map_err(|e| e.to_string())?;
            let failures = if from_table == from_labels {
                Vec::new()
            } else {
                vec!["(degree, true level) multisets differ".to_string()]
            };
            Ok(SuiteOutcome {
                instances: 1,
                failures,
            })
        }
        "gu-inner" => {
            let mut instances = 0;
            let mut failures = Vec::new();
            for (n, q) in [(2u32, 2u64), (2, 3), (3, 2)] {
                let (g, t) = table_of(GroupSpec::gu(n, q))?;
                let tau = weil_class_values(&g, &t);
                for m in 1..=n {
                    instances += 1;
                    if inner_with_trivial(&t, &tau, m) != gu_power_inner(m, q) {
                        failures.push(format!("GU({},{}) m={}", n, q, m));
                    }
                }
                instances += 1;
                if !parity_check(&g, &t).map_err(|e| e.to_string())? {
                    failures.push(format!("parity GU({},{})", n, q));
                }
            }
            Ok(SuiteOutcome {
                instances,
                failures,
            })
        }
        "weil-bounds" => Ok(weil_bound_scan(seed)),
        "pencil" => {
            let mut instances = 0;
            let mut failures = Vec::new();
            for (j, q) in [(1u32, 2u64), (1, 3), (2, 2)] {
                instances += 1;
                let f = pencil_big_f(j, q).map_err(|e| e.to_string())?;
                let oracle = pencil_orbit_oracle(j, 2 * j, q).map_err(|e| e.to_string())?;
                if f != oracle {
                    failures.push(format!("F({},{})", j, q));
                }
            }
            instances += 1;
            if !pencil_bounds_check(2, 2, 2).map_err(|e| e.to_string())? {
                failures.push("sandwich (2,2,2)".into());
            }
            Ok(SuiteOutcome {
                instances,
                failures,
            })
        }
        "walks" => {
            let mut instances = 0;
            let mut failures = Vec::new();
            for spec in [GroupSpec::sl(2, 3), GroupSpec::sl(2, 4)] {
                let (_g, t) = table_of(spec)?;
                for class in 0..t.num_classes() {
                    if t.class_sizes[class] == 1 {
                        continue;
                    }
                    for tt in 1..=10u32 {
                        instances += 1;
                        let rep = random_walk(&t, class, tt).map_err(|e| e.to_string())?;
                        if rep.row_sum != Rat::one() || &rep.l1 * &rep.l1 > rep.ds_bound {
                            failures.push(format!("{} class {} t={}", spec, class, tt));
                        }
                    }
                }
            }
            let (_g, t) = table_of(GroupSpec::sl(2, 4))?;
            instances += 1;
            if !mu_commutator(&t).iter().all(|v| v.is_positive()) {
                failures.push("commutator measure not positive on SL(2,4)".into());
            }
            Ok(SuiteOutcome {
                instances,
                failures,
            })
        }
        "thresholds" => {
            let mut instances = 0;
            let mut failures = Vec::new();
            let grid = [
                Rat::one(),
                Rat::new(Int::from(3), Int::from(2)),
                Rat::from(Int::from(2)),
                Rat::from(Int::from(4)),
            ];
            for m in -1..=3i32 {
                for k in 0..=32u32 {
                    let mut prev: Option<Rat> = None;
                    for c in &grid {
                        instances += 1;
                        let mut calc = ThresholdCalc::new(c.clone()).map_err(|e| e.to_string())?;
                        let f = calc.f(m, k);
                        let base_ok = (m != -1 && k != 0) || f == Rat::one();
                        let mono_ok = prev.map_or(true, |p| f >= p);
                        if !(f >= Rat::one() && base_ok && mono_ok) {
                            failures.push(format!("f({},{},{})", c, m, k));
                        }
                        prev = Some(f);
                    }
                }
            }
            Ok(SuiteOutcome {
                instances,
                failures,
            })
        }
        name if known_suites().contains(&name) => {
            let report = inequality_suite(name).map_err(|e| e.to_string())?;
            Ok(SuiteOutcome {
                instances: report.instances,
                failures: report.failures,
            })
        }
        other => Err(format!(
            "unknown suite: {} (available: {})",
            other,
            available().join(", ")
        )),
    }
}

/// First-level value bounds on seeded random noncentral elements, at
/// command-line scale (the acceptance battery runs the full ranges).
fn weil_bound_scan(seed: u64) -> SuiteOutcome {
    use charlevel_core::gfcore::{
        field_make, is_central, split_prime_power, weil_component_value, Mat,
    };
    use charlevel_core::rng::SplitMix64;
    let mut rng = SplitMix64::new(seed);
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 6..=7u32 {
        for q in [2u64, 3] {
            let spec = GroupSpec::gl(n, q);
            let (p, f) = split_prime_power(q).unwrap();
            let field = field_make(p, f).unwrap();
            let m = (q - 1) as u32;
            // Component degrees at the identity.
            let id = Mat::identity(n as usize);
            let mut degrees = Vec::new();
            for psi in 0..m.max(1) {
                let v = weil_component_value(&spec, psi, &id, &field)
                    .as_rational()
                    .unwrap()
                    .to_integer();
                degrees.push(if psi == 0 { v - Int::from(2) } else { v });
            }
            let mut tested = 0;
            while tested < 100 {
                let mut g = Mat::zero(n as usize);
                for v in g.data.iter_mut() {
                    *v = rng.below(q) as u32;
                }
                if g.inverse(&field).is_none() || is_central(&g) {
                    continue;
                }
                tested += 1;
                instances += 1;
                for psi in 0..m.max(1) {
                    let raw = weil_component_value(&spec, psi, &g, &field);
                    let adj = if psi == 0 {
                        raw.as_rational().unwrap() - Rat::from(Int::from(2))
                    } else {
                        raw.as_rational().unwrap()
                    };
                    let vsq = &adj * &adj;
                    // |χ(g)|^{2n} < (1.76)^{2n} χ(1)^{2(n-1)}.
                    let mut lhs = Rat::one();
                    let mut c2n = Rat::one();
                    let c = Rat::new(Int::from(176), Int::from(100));
                    for _ in 0..n {
                        lhs *= &vsq;
                        c2n *= &c * &c;
                    }
                    let rhs = c2n * Rat::from(degrees[psi as usize].pow(2 * (n - 1)));
                    if lhs >= rhs {
                        failures.push(format!("GL({},{}) ψ={}", n, q, psi));
                    }
                }
            }
        }
    }
    SuiteOutcome {
        instances,
        failures,
    }
}

/// Verify a dual pair at explicit parameters; used by both `verify dual-pair`
/// (via the dualpair subcommand) and the acceptance battery.
pub fn dual_pair_outcome(eps: Sign, n: u32, j: u32, q: u64) -> Result<SuiteOutcome, String> {
    let spec_g = GroupSpec {
        eps,
        n,
        q,
        special: false,
    };
    let spec_s = GroupSpec {
        eps,
        n: j,
        q,
        special: false,
    };
    let (gg, tg) = table_of(spec_g)?;
    let (gs, ts) = table_of(spec_s)?;
    let dp = dual_pair_decompose(&gg, &tg, &ts).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    if !dp.completeness_check(&tg, &ts) {
        failures.push("completeness".into());
    }
    let tl_g = empirical_true_level(&gg, &tg);
    let tl_s = empirical_true_level(&gs, &ts);
    let threshold = 2 * j as i64 - n as i64;
    let mut partners = Vec::new();
    for (alpha, row) in dp.mults.iter().enumerate() {
        let eligible = tl_s[alpha] as i64 >= threshold;
        let level_j: Vec<usize> = row
            .iter()
            .enumerate()
            .filter(|(t, m)| tl_g[*t] == j && !m.is_zero())
            .map(|(t, _)| t)
            .collect();
        if eligible {
            if level_j.len() == 1 && row[level_j[0]].is_one() {
                partners.push(level_j[0]);
            } else {
                failures.push(format!("no unique partner for α={}", alpha));
            }
        } else if !level_j.is_empty() {
            failures.push(format!("ineligible α={} reaches level {}", alpha, j));
        }
    }
    let mut sorted = partners.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let all: Vec<usize> = (0..tg.num_chars()).filter(|&i| tl_g[i] == j).collect();
    if sorted.len() != partners.len() || sorted != all {
        failures.push("partner map is not a bijection onto the level-j characters".into());
    }
    // Label surgery agrees on degrees.
    let mut lifted: Vec<Int> = enumerate_labels(&spec_s)
        .map_err(|e| e.to_string())?
        .iter()
        .filter(|a| true_level(a) as i64 >= threshold)
        .map(|a| degree(&theta_inverse(a, n).unwrap()))
        .collect();
    lifted.sort();
    let mut got: Vec<Int> = partners
        .iter()
        .map(|&t| tg.chars[t].degree.clone())
        .collect();
    got.sort();
    if lifted != got {
        failures.push("label surgery degrees differ from partner degrees".into());
    }
    Ok(SuiteOutcome {
        instances: dp.mults.len() as u64,
        failures,
    })
}

/// The full battery at command-line scale.
pub fn run_all(seed: u64) -> Result<Vec<(String, SuiteOutcome)>, String> {
    let mut out = Vec::new();
    for name in [
        "z-identity",
        "hall-sum",
        "orbit-counts",
        "gu-inner",
        "weil-bounds",
        "pencil",
        "walks",
        "thresholds",
        "elementary-products",
        "bracket-exceptions",
        "unipotent-floors",
        "centralizer-indices",
        "degree-level",
        "special-degree-level",
        "dual-level-sum",
        "dual-degree-product",
        "tensor-fixed-space",
    ] {
        out.push((name.to_string(), run(name, None, seed)?));
    }
    for spec in [
        GroupSpec::gl(2, 2),
        GroupSpec::gl(2, 3),
        GroupSpec::gl(3, 2),
        GroupSpec::gu(2, 2),
        GroupSpec::gu(2, 3),
        GroupSpec::gu(3, 2),
    ] {
        out.push((
            format!("degree-multiset {}", spec),
            run("degree-multiset", Some(spec), seed)?,
        ));
        out.push((
            format!("level-multiset {}", spec),
            run("level-multiset", Some(spec), seed)?,
        ));
    }
    for (eps, n, j, q) in [
        (Sign::Plus, 2, 1, 2u64),
        (Sign::Plus, 2, 1, 3),
        (Sign::Plus, 3, 1, 2),
        (Sign::Plus, 4, 2, 2),
        (Sign::Minus, 2, 1, 2),
        (Sign::Minus, 3, 1, 2),
    ] {
        out.push((
            format!("dual-pair ({},{},{},{})", eps, n, j, q),
            dual_pair_outcome(eps, n, j, q)?,
        ));
    }
    Ok(out)
}
