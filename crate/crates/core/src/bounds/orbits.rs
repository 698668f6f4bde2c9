//! Closed-form orbit counts and their ceilings.

use crate::gfcore::Sign;
use crate::qcomb::gauss_binom_eval;
use crate::Int;
use num_traits::{One, Zero};

/// Closed-form orbit count on ordered `j`-tuples of vectors:
/// `Σ_{i=0}^{j} binom(j,i)_q` for linear groups (valid for `j ≤ n`),
/// `Π_{i=1}^{j} (q^{2i−1}+1)` for unitary groups (valid for `j ≤ n/2`).
pub fn orbit_formula(eps: Sign, j: u32, q: u64) -> Int {
    match eps {
        Sign::Plus => {
            let q = Int::from(q);
            (0..=j).map(|i| gauss_binom_eval(j, i, &q)).sum()
        }
        Sign::Minus => {
            let q = Int::from(q);
            let mut acc = Int::one();
            for i in 1..=j {
                acc *= q.pow(2 * i - 1) + 1;
            }
            acc
        }
    }
}

/// `[ζ^m, 1]` closed form for `m ≤ n`: zero for odd `m`,
/// `(q+1)(q³+1)…(q^{m−1}+1)` for even `m`.
pub fn gu_power_inner(m: u32, q: u64) -> Int {
    if m % 2 == 1 {
        return Int::zero();
    }
    let q = Int::from(q);
    let mut acc = Int::one();
    let mut i = 1;
    while i < m {
        acc *= q.pow(i) + 1;
        i += 2;
    }
    acc
}

/// Orbit-count ceilings: `value ≤ 8·q^{j²/4}` (linear, compared as
/// `value⁴ ≤ 8⁴·q^{j²}`) and `value ≤ 2·q^{j²}` (unitary).
pub fn orbit_bounds_check(eps: Sign, j: u32, q: u64, value: &Int) -> bool {
    let q = Int::from(q);
    match eps {
        Sign::Plus => value.pow(4) <= Int::from(4096) * q.pow(j * j),
        Sign::Minus => value.clone() <= Int::from(2) * q.pow(j * j),
    }
}

/// Companion floor for linear groups: `value ≥ q^{⌊j²/4⌋}`.
pub fn orbit_lower_check(j: u32, q: u64, value: &Int) -> bool {
    *value >= Int::from(q).pow(j * j / 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_small() {
        assert_eq!(orbit_formula(Sign::Plus, 1, 7), Int::from(2));
        assert_eq!(orbit_formula(Sign::Plus, 2, 3), Int::from(6)); // q + 3
        assert_eq!(orbit_formula(Sign::Minus, 1, 2), Int::from(3)); // q + 1
        assert_eq!(orbit_formula(Sign::Minus, 2, 2), Int::from(27)); // (q+1)(q^3+1)
    }

    #[test]
    fn gu_inner_cases() {
        assert_eq!(gu_power_inner(1, 5), Int::zero());
        assert_eq!(gu_power_inner(3, 5), Int::zero());
        assert_eq!(gu_power_inner(2, 5), Int::from(6));
        assert_eq!(gu_power_inner(4, 2), Int::from(27));
    }

    #[test]
    fn ceilings_hold_on_formula_values() {
        for q in [2u64, 3, 4, 5, 7] {
            for j in 1..=4u32 {
                let gl = orbit_formula(Sign::Plus, j, q);
                assert!(
                    orbit_bounds_check(Sign::Plus, j, q, &gl),
                    "GL j={} q={}",
                    j,
                    q
                );
                assert!(orbit_lower_check(j, q, &gl));
                let gu = orbit_formula(Sign::Minus, j, q);
                assert!(
                    orbit_bounds_check(Sign::Minus, j, q, &gu),
                    "GU j={} q={}",
                    j,
                    q
                );
            }
        }
    }
}
