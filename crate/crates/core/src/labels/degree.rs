//! Exact character degrees from labels.
//!
//! The degree of the label `{orbit_f ↦ λ_f}` of `GL^ε_n(q)` is the `p'`-part
//! of the index of the centralizer Levi times the product of unipotent
//! degrees of its factors:
//!
//! `χ(1) = [G : Π_f GL^{ε'_f}_{k_f}(q^{d_f})]_{p'} · Π_f ψ^{λ_f}(1)`
//!
//! where the factor sign `ε'_f` is `+` for linear groups, and for unitary
//! groups `−` when `d_f` is odd, `+` when even. The unipotent degree is the
//! quantized hook formula over the factor's base `Q = q^{d_f}`:
//!
//! `ψ^λ(1) = Q^{a(λ)} Π_{i=1..k}(Q^i − ε'^i) / Π_h (Q^{l(h)} − ε'^{l(h)})`.
//!
//! Degrees are computed as one full numerator product followed by one exact
//! division, so exactness is asserted rather than assumed.

use super::{CharLabel, EigenOrbit};
use crate::gfcore::{GroupSpec, Sign};
use crate::qcomb::{Partition, QPoly};
use crate::Int;
use num_traits::{One, Zero};

/// Sign and base of the centralizer factor attached to an orbit class:
/// `(+, q^d)` for linear groups; for unitary groups `(−, q^d)` when `d` is
/// odd and `(+, q^d)` when `d` is even.
pub fn centralizer_factor(spec: &GroupSpec, orbit: &EigenOrbit) -> (Sign, Int) {
    let base = Int::from(spec.q).pow(orbit.d);
    let sign = match spec.eps {
        Sign::Plus => Sign::Plus,
        Sign::Minus => {
            if orbit.d % 2 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        }
    };
    (sign, base)
}

/// Quantized hook formula: `ψ^λ(1)` over `GL^{ε'}_k(Q)`.
pub fn unipotent_degree(lam: &Partition, big_q: &Int, eps_prime: Sign) -> Int {
    assert!(!lam.is_empty(), "unipotent degree of the empty partition");
    let k = lam.size() as u32;
    let mut num = big_q.pow(lam.stats().a as u32);
    for i in 1..=k {
        num *= big_q.pow(i) - Int::from(eps_prime.pow(i));
    }
    let mut den = Int::one();
    for h in lam.hook_lengths() {
        den *= big_q.pow(h) - Int::from(eps_prime.pow(h));
    }
    let (v, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(
        r.is_zero(),
        "hook quotient is not integral: internal defect"
    );
    v
}

/// Polynomial form of the unipotent degree in the base variable; monic of
/// degree `b(λ)`.
pub fn unipotent_degree_poly(lam: &Partition, eps_prime: Sign) -> QPoly {
    assert!(!lam.is_empty());
    let k = lam.size() as u32;
    let mut num = QPoly::monomial(Int::one(), lam.stats().a as usize);
    for i in 1..=k {
        num = &num * &QPoly::power_diff(i as usize, eps_prime.pow(i), 0);
    }
    let mut den = QPoly::one();
    for h in lam.hook_lengths() {
        den = &den * &QPoly::power_diff(h as usize, eps_prime.pow(h), 0);
    }
    num.exact_div(&den)
}

/// `p'`-part of the index `[G : Π_i GL^{ε'_i}_{n_i}(Q_i)]`:
/// `Π_{i=1..n}(q^i − ε^i) / Π_i Π_{j=1..n_i}(Q_i^j − ε'_i^j)`.
///
/// Each factor is given as `(sign, rank, base)`; the ranks weighted by
/// `log_q base` must sum to `n`.
pub fn index_pprime(spec: &GroupSpec, factors: &[(Sign, u32, Int)]) -> Int {
    let num = spec.general().order_p_prime();
    let mut den = Int::one();
    for (sign, rank, base) in factors {
        for j in 1..=*rank {
            den *= base.pow(j) - Int::from(sign.pow(j));
        }
    }
    let (v, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "p'-index is not integral: internal defect");
    v
}

/// Exact degree of a label.
pub fn degree(label: &CharLabel) -> Int {
    let spec = label.spec();
    // Numerator: p'-order of G times every factor's a(λ)-power; denominator:
    // all hook factors. The Levi-order factors cancel against the unipotent
    // numerators, so they are omitted from both sides.
    let mut num = spec.general().order_p_prime();
    let mut den = Int::one();
    for (orbit, lam) in label.entries() {
        let (sign, base) = centralizer_factor(&spec, orbit);
        num *= base.pow(lam.stats().a as u32);
        for h in lam.hook_lengths() {
            den *= base.pow(h) - Int::from(sign.pow(h));
        }
    }
    let (v, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "label degree is not integral: internal defect");
    assert!(v >= Int::one(), "label degree must be positive");
    v
}

/// Degree as an integer polynomial in `q`; monic of degree
/// `b(combined partition)`.
pub fn degree_poly(label: &CharLabel) -> QPoly {
    let spec = label.spec();
    let mut num = QPoly::one();
    for i in 1..=spec.n {
        num = &num * &QPoly::power_diff(i as usize, spec.eps.pow(i), 0);
    }
    let mut den = QPoly::one();
    for (orbit, lam) in label.entries() {
        let (sign, _) = centralizer_factor(&spec, orbit);
        let d = orbit.d as usize;
        num = &num * &QPoly::monomial(Int::one(), d * lam.stats().a as usize);
        for h in lam.hook_lengths() {
            den = &den * &QPoly::power_diff(d * h as usize, sign.pow(h), 0);
        }
    }
    num.exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::OrbitKind;
    use std::collections::BTreeMap;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn unipotent_degrees() {
        // Trivial character.
        assert_eq!(
            unipotent_degree(&pt(&[5]), &Int::from(3), Sign::Plus),
            Int::one()
        );
        // Steinberg: q^{n(n-1)/2}.
        assert_eq!(
            unipotent_degree(&pt(&[1, 1, 1]), &Int::from(2), Sign::Plus),
            Int::from(8)
        );
        assert_eq!(
            unipotent_degree(&pt(&[1, 1]), &Int::from(3), Sign::Plus),
            Int::from(3)
        );
        // Unitary Steinberg of rank 2 over q=2.
        assert_eq!(
            unipotent_degree(&pt(&[1, 1]), &Int::from(2), Sign::Minus),
            Int::from(2)
        );
    }

    #[test]
    fn unipotent_poly_is_monic_of_degree_b() {
        for n in 1..=8u32 {
            for lam in crate::qcomb::partitions_of(n) {
                for sign in [Sign::Plus, Sign::Minus] {
                    let p = unipotent_degree_poly(&lam, sign);
                    assert!(p.is_monic(), "{:?} {:?}", lam, sign);
                    assert_eq!(p.degree(), Some(lam.stats().b as usize));
                    // Polynomial and integer versions agree.
                    for q in [2u32, 3] {
                        let big_q = Int::from(q);
                        assert_eq!(p.eval(&big_q), unipotent_degree(&lam, &big_q, sign));
                    }
                }
            }
        }
    }

    #[test]
    fn pprime_indices() {
        let gl2 = GroupSpec::gl(2, 5);
        let split = [
            (Sign::Plus, 1u32, Int::from(5)),
            (Sign::Plus, 1, Int::from(5)),
        ];
        assert_eq!(index_pprime(&gl2, &split), Int::from(6)); // q + 1

        let gu2 = GroupSpec::gu(2, 3);
        let usplit = [
            (Sign::Minus, 1u32, Int::from(3)),
            (Sign::Minus, 1, Int::from(3)),
        ];
        assert_eq!(index_pprime(&gu2, &usplit), Int::from(2)); // q - 1

        // Single factor equal to the whole group.
        let whole = [(Sign::Plus, 2u32, Int::from(5))];
        assert_eq!(index_pprime(&gl2, &whole), Int::one());
    }

    #[test]
    fn degrees_of_named_labels() {
        for spec in [
            GroupSpec::gl(4, 3),
            GroupSpec::gu(4, 2),
            GroupSpec::gl(3, 2),
        ] {
            assert_eq!(degree(&CharLabel::trivial(spec)), Int::one());
            let st = degree(&CharLabel::steinberg(spec));
            assert_eq!(st, Int::from(spec.q).pow(spec.n * (spec.n - 1) / 2));
        }
    }

    #[test]
    fn cuspidal_gl2_degree_is_q_minus_one() {
        for q in [2u64, 3, 5] {
            let spec = GroupSpec::gl(2, q);
            let mut entries = BTreeMap::new();
            entries.insert(EigenOrbit::generic(2, 0), pt(&[1]));
            let label = CharLabel::new(spec, entries).unwrap();
            assert_eq!(degree(&label), Int::from(q - 1));
        }
    }

    #[test]
    fn degree_poly_monic_of_combined_b() {
        // Degree polynomial in q for the cuspidal GL_3 label.
        let spec = GroupSpec::gl(3, 2);
        let mut entries = BTreeMap::new();
        entries.insert(
            EigenOrbit {
                d: 3,
                kind: OrbitKind::Generic { index: 0 },
            },
            pt(&[1]),
        );
        let label = CharLabel::new(spec, entries).unwrap();
        let p = degree_poly(&label);
        assert!(p.is_monic());
        assert_eq!(
            p.degree(),
            Some(label.combined_partition().stats().b as usize)
        );
        assert_eq!(p.eval(&Int::from(2)), degree(&label));
    }

    #[test]
    fn degree_equals_factored_product() {
        // degree = index_pprime * product of unipotent degrees.
        let spec = GroupSpec::gu(4, 2);
        let mut entries = BTreeMap::new();
        entries.insert(EigenOrbit::unit(1), pt(&[2]));
        entries.insert(EigenOrbit::generic(2, 0), pt(&[1]));
        let label = CharLabel::new(spec, entries).unwrap();
        let mut factors = Vec::new();
        let mut product = Int::one();
        for (orbit, lam) in label.entries() {
            let (sign, base) = centralizer_factor(&spec, orbit);
            factors.push((sign, lam.size() as u32, base.clone()));
            product *= unipotent_degree(lam, &base, sign);
        }
        let via_parts = index_pprime(&spec, &factors) * product;
        assert_eq!(degree(&label), via_parts);
    }
}
