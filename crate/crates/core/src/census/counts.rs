//! Eigenvalue-orbit class counts by Möbius inversion.
//!
//! The orbit map is `x ↦ x^q` for linear and `x ↦ x^{−q}` for unitary
//! groups, acting on the multiplicative group of the algebraic closure. The
//! elements whose orbit size divides `m` form a cyclic group of order
//! `q^m − 1` (linear) or `q^m − (−1)^m` (unitary), and inversion over the
//! divisor lattice counts the orbits of each exact degree.

use crate::error::{Error, Result};
use crate::gfcore::{GroupSpec, Sign};
use crate::labels::ScalingTables;
use crate::Int;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Per-degree orbit class counts: `q − ε` unit classes at degree 1, and
/// `generic[d]` generic classes of each degree `d ≥ 1`.
#[derive(Clone, Debug)]
pub struct OrbitClassCounts {
    pub spec: GroupSpec,
    pub unit: u64,
    pub generic: BTreeMap<u32, Int>,
}

/// Number of elements fixed by the `m`-th power of the orbit map:
/// `q^m − 1` (linear) or `q^m − (−1)^m` (unitary).
pub fn orbit_universe_size(spec: &GroupSpec, m: u32) -> Int {
    let q = Int::from(spec.q);
    match spec.eps {
        Sign::Plus => q.pow(m) - 1,
        Sign::Minus => q.pow(m) - Int::from(Sign::Minus.pow(m)),
    }
}

/// Exact class counts for all degrees up to `up_to_degree`.
pub fn orbit_class_counts(spec: &GroupSpec, up_to_degree: u32) -> OrbitClassCounts {
    let unit = (spec.q as i64 - spec.eps.as_i64()) as u64;
    let mut generic = BTreeMap::new();
    for d in 1..=up_to_degree {
        // Möbius inversion over divisors of d.
        let mut total = Int::zero();
        for e in 1..=d {
            if d % e != 0 {
                continue;
            }
            let mu = moebius(d / e);
            if mu == 0 {
                continue;
            }
            total += Int::from(mu) * orbit_universe_size(spec, e);
        }
        let (orbits, rem) = num_integer::Integer::div_rem(&total, &Int::from(d));
        assert!(rem.is_zero(), "orbit count must be integral");
        let count = if d == 1 {
            // All degree-1 classes are unit classes.
            assert_eq!(orbits, Int::from(unit));
            Int::zero()
        } else {
            orbits
        };
        generic.insert(d, count);
    }
    OrbitClassCounts {
        spec: *spec,
        unit,
        generic,
    }
}

impl OrbitClassCounts {
    pub fn generic_at(&self, d: u32) -> Int {
        self.generic.get(&d).cloned().unwrap_or_else(Int::zero)
    }

    /// `Σ_{d | m} d · (count_d + [d = 1]·unit)` must reproduce the universe
    /// size at every level `m`.
    pub fn verify_partition_identity(&self, up_to: u32) -> bool {
        for m in 1..=up_to {
            let mut sum = Int::from(self.unit);
            for d in 1..=m {
                if m % d == 0 {
                    sum += Int::from(d) * self.generic_at(d);
                }
            }
            if sum != orbit_universe_size(&self.spec, m) {
                return false;
            }
        }
        true
    }
}

pub fn moebius(n: u32) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Explicit orbit model for one degree: orbits of the map `a ↦ ±q·a` on the
/// cyclic group `Z / (q^d − ε^d)`, identified by the rank of their minimal
/// representative. Used to build scaling tables for linear twists.
pub fn orbit_tables(spec: &GroupSpec, up_to_degree: u32) -> Result<ScalingTables> {
    if spec.q > 4 || up_to_degree > 4 {
        return Err(Error::Unsupported(
            "explicit orbit tables are provided for q <= 4 and degree <= 4 only".into(),
        ));
    }
    let center = (spec.q as i64 - spec.eps.as_i64()) as u64;
    let mut by_degree = BTreeMap::new();
    for d in 2..=up_to_degree {
        let modulus: u64 = match spec.eps {
            Sign::Plus => spec.q.pow(d) - 1,
            Sign::Minus => {
                if d % 2 == 0 {
                    spec.q.pow(d) - 1
                } else {
                    spec.q.pow(d) + 1
                }
            }
        };
        let step: i64 = match spec.eps {
            Sign::Plus => spec.q as i64,
            Sign::Minus => -(spec.q as i64),
        };
        // Orbit of a: {a, a·step, a·step², …} mod modulus.
        let orbit_of = |a: u64| -> Vec<u64> {
            let mut seen = vec![a];
            let mut cur = a;
            loop {
                let next = mul_mod_signed(cur, step, modulus);
                if next == a {
                    break;
                }
                seen.push(next);
                cur = next;
            }
            seen
        };
        // Minimal representatives of orbits of size exactly d.
        let mut reps: Vec<u64> = Vec::new();
        let mut seen = vec![false; modulus as usize];
        for a in 0..modulus {
            if seen[a as usize] {
                continue;
            }
            let orb = orbit_of(a);
            for &x in &orb {
                seen[x as usize] = true;
            }
            if orb.len() == d as usize {
                reps.push(*orb.iter().min().unwrap());
            }
        }
        reps.sort_unstable();
        let rank_of = |rep: u64| reps.binary_search(&rep).expect("known representative") as u32;
        // Scaling by the canonical center generator adds modulus/center to
        // the exponent.
        assert!(modulus % center == 0, "center embeds in every orbit level");
        let shift = modulus / center;
        let mut perm = vec![0u32; reps.len()];
        for (i, &rep) in reps.iter().enumerate() {
            let moved = (rep + shift) % modulus;
            let min_rep = *orbit_of(moved).iter().min().unwrap();
            perm[i] = rank_of(min_rep);
        }
        by_degree.insert(d, perm);
    }
    Ok(ScalingTables { by_degree })
}

fn mul_mod_signed(a: u64, step: i64, modulus: u64) -> u64 {
    let prod = (a as i128) * (step as i128);
    let m = modulus as i128;
    (((prod % m) + m) % m) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_small() {
        let vals: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(vals, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn counts_match_hand_derivations() {
        let gl3 = orbit_class_counts(&GroupSpec::gl(2, 3), 2);
        assert_eq!(gl3.unit, 2);
        // (q^2 - q)/2 generic quadratic classes.
        assert_eq!(gl3.generic_at(2), Int::from(3));

        let gu2 = orbit_class_counts(&GroupSpec::gu(2, 2), 2);
        assert_eq!(gu2.unit, 3);
        // ((q^2 - 1) - (q + 1))/2 = 0 for q = 2.
        assert_eq!(gu2.generic_at(2), Int::zero());

        let gu3 = orbit_class_counts(&GroupSpec::gu(2, 3), 2);
        assert_eq!(gu3.generic_at(2), Int::from(2));
    }

    #[test]
    fn partition_identities() {
        for q in [2u64, 3, 4, 5] {
            for spec in [GroupSpec::gl(2, q), GroupSpec::gu(2, q)] {
                let counts = orbit_class_counts(&spec, 8);
                assert!(counts.verify_partition_identity(8), "{}", spec);
            }
        }
    }

    #[test]
    fn scaling_tables_are_permutations() {
        for spec in [
            GroupSpec::gl(2, 3),
            GroupSpec::gu(2, 2),
            GroupSpec::gl(3, 2),
        ] {
            let tables = orbit_tables(&spec, 4).unwrap();
            let counts = orbit_class_counts(&spec, 4);
            for (d, perm) in &tables.by_degree {
                assert_eq!(Int::from(perm.len()), counts.generic_at(*d), "degree {}", d);
                let mut seen = vec![false; perm.len()];
                for &i in perm {
                    assert!(!seen[i as usize], "not a permutation");
                    seen[i as usize] = true;
                }
            }
        }
    }
}
