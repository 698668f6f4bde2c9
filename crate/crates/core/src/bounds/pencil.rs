//! Orbit counts on pairs of linear maps (matrix pencils).
//!
//! The normal-form pieces of a pencil contribute independently: an invertible
//! square part (counted by conjugacy classes of `GL_r(q)`), two nilpotent
//! square types, a tall type, a wide type (no parts of size one), and a zero
//! part. `F(j,q) = Σ_r f_{j−r} k(GL_r(q))` counts the orbits exactly in the
//! stable range `n ≥ 2j`; outside it the `h`/`f` sums sandwich the count.

use crate::census::class_number;
use crate::error::Result;
use crate::gfcore::{pencil_orbit_oracle, GroupSpec};
use crate::qcomb::partition_counts;
use crate::Int;
use num_traits::Zero;

/// `f_m = Σ_{a+b+c+d ≤ m} p(a) p(b) p(c) p'(d)`.
pub fn pencil_f(m: u32) -> Int {
    let mut acc = Int::zero();
    for a in 0..=m {
        let (pa, _) = partition_counts(a);
        for b in 0..=m - a {
            let (pb, _) = partition_counts(b);
            for c in 0..=m - a - b {
                let (pc, _) = partition_counts(c);
                for d in 0..=m - a - b - c {
                    let (_, pd_no_ones) = partition_counts(d);
                    acc += &pa * &pb * &pc * pd_no_ones;
                }
            }
        }
    }
    acc
}

/// `h_m = Σ_{a+b+d ≤ m} p(a) p(b) p'(d)` (the tall type dropped).
pub fn pencil_h(m: u32) -> Int {
    let mut acc = Int::zero();
    for a in 0..=m {
        let (pa, _) = partition_counts(a);
        for b in 0..=m - a {
            let (pb, _) = partition_counts(b);
            for d in 0..=m - a - b {
                let (_, pd_no_ones) = partition_counts(d);
                acc += &pa * &pb * pd_no_ones;
            }
        }
    }
    acc
}

/// `F(j,q) = Σ_{r=0}^{j} f_{j−r} · k(GL_r(q))`.
pub fn pencil_big_f(j: u32, q: u64) -> Result<Int> {
    let mut acc = Int::zero();
    for r in 0..=j {
        let k = if r == 0 {
            Int::from(1)
        } else {
            class_number(&GroupSpec::gl(r, q))?
        };
        acc += pencil_f(j - r) * k;
    }
    Ok(acc)
}

/// Lower companion `Σ_{r=0}^{j} h_{j−r} · k(GL_r(q))`.
pub fn pencil_big_h(j: u32, q: u64) -> Result<Int> {
    let mut acc = Int::zero();
    for r in 0..=j {
        let k = if r == 0 {
            Int::from(1)
        } else {
            class_number(&GroupSpec::gl(r, q))?
        };
        acc += pencil_h(j - r) * k;
    }
    Ok(acc)
}

/// Sandwich check against the Burnside oracle: the orbit count `N_{n,j}` on
/// pairs of maps lies in `[Σ h_{j−r} k(GL_r), Σ f_{j−r} k(GL_r)]`, with
/// equality to `F(j,q)` when `n ≥ 2j`.
pub fn pencil_bounds_check(n: u32, j: u32, q: u64) -> Result<bool> {
    let oracle = pencil_orbit_oracle(j, n, q)?;
    let hi = pencil_big_f(j, q)?;
    let lo = pencil_big_h(j, q)?;
    if n >= 2 * j {
        Ok(oracle == hi)
    } else {
        Ok(lo <= oracle && oracle <= hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_values() {
        assert_eq!(pencil_f(0), Int::from(1));
        assert_eq!(pencil_h(0), Int::from(1));
        assert_eq!(pencil_f(1), Int::from(4));
        assert_eq!(pencil_h(1), Int::from(3));
    }

    #[test]
    fn f1_gives_q_plus_three() {
        for q in [2u64, 3, 5] {
            assert_eq!(pencil_big_f(1, q).unwrap(), Int::from(q + 3));
        }
    }

    #[test]
    fn stable_range_matches_oracle() {
        assert!(pencil_bounds_check(2, 1, 2).unwrap());
        assert!(pencil_bounds_check(3, 1, 3).unwrap());
    }
}
