//! Rank thresholds for the exponential character-value bounds.
//!
//! `f(C,m,k)` is the rank past which every character of level `k` satisfies
//! `|χ(g)| ≤ χ(1)^{δ(C,m,k)}` at elements with centralizer at most `q^{Cn}`,
//! and `h(C,m)` the rank past which `|χ(g)| ≤ χ(1)^{1/2^m}` holds for all
//! characters. The recursion fixes base cases `f(C,−1,k) = 1` (with exponent
//! 1) and `f(C,m,0) = 1`, takes the closed values
//! `f = 2^{m+3}C + 16`, `δ = 1/2^{m+1}` in the regime `k ≥ 2^{m+1}C`, and
//! below it runs a backward induction with
//!
//! `γ = max(α/2, β)`, `α = max_{0≤i≤k} δ(C,m−1,i)`,
//! `β = max_{k<i≤2k} δ(C,m,i)`,
//! `f(C,m,k) = max(2^{m+3}C+16, max_i f(C,m−1,i), max_i f(C,m,i), (3k+3)/(δ−γ))`.
//!
//! The exponent `δ(C,m,k)` must only satisfy `γ < δ < 1/2^m`; this calculator
//! pins the midpoint `δ = (γ + 1/2^m)/2`, making the outputs canonical and
//! monotone in `C`. They are one admissible choice of thresholds, not a
//! uniquely determined function.

use crate::error::{Error, Result};
use crate::{Int, Rat};
use num_traits::One;
use std::collections::HashMap;

/// Threshold calculator for a fixed `C ≥ 1` with the midpoint policy.
pub struct ThresholdCalc {
    c: Rat,
    f_memo: HashMap<(i32, u32), Rat>,
    d_memo: HashMap<(i32, u32), Rat>,
}

impl ThresholdCalc {
    pub fn new(c: Rat) -> Result<ThresholdCalc> {
        if c < Rat::one() {
            return Err(Error::InvalidInput(
                "threshold constant C must be at least 1".into(),
            ));
        }
        Ok(ThresholdCalc {
            c,
            f_memo: HashMap::new(),
            d_memo: HashMap::new(),
        })
    }

    fn pow2(e: i32) -> Rat {
        if e >= 0 {
            Rat::from(Int::from(2).pow(e as u32))
        } else {
            Rat::new(Int::one(), Int::from(2).pow((-e) as u32))
        }
    }

    /// Is `k` in the closed-form regime `k ≥ 2^{m+1} C`?
    fn closed_regime(&self, m: i32, k: u32) -> bool {
        Rat::from(Int::from(k)) >= Self::pow2(m + 1) * &self.c
    }

    /// Exponent `δ(C,m,k)`.
    pub fn delta(&mut self, m: i32, k: u32) -> Rat {
        if let Some(v) = self.d_memo.get(&(m, k)) {
            return v.clone();
        }
        let v = if m == -1 {
            Rat::one()
        } else if k == 0 || self.closed_regime(m, k) {
            // Any exponent at least 1/2^{m+1} works at level 0; the regime
            // value is exactly 1/2^{m+1}.
            Self::pow2(-(m + 1))
        } else {
            let gamma = self.gamma(m, k);
            // Midpoint of (γ, 1/2^m).
            (gamma + Self::pow2(-m)) / Rat::from(Int::from(2))
        };
        self.d_memo.insert((m, k), v.clone());
        v
    }

    fn gamma(&mut self, m: i32, k: u32) -> Rat {
        let alpha = (0..=k)
            .map(|i| self.delta(m - 1, i))
            .max()
            .expect("nonempty range");
        let beta = (k + 1..=2 * k)
            .map(|i| self.delta(m, i))
            .max()
            .expect("nonempty range for k >= 1");
        (alpha / Rat::from(Int::from(2))).max(beta)
    }

    /// Rank threshold `f(C,m,k)`.
    pub fn f(&mut self, m: i32, k: u32) -> Rat {
        if let Some(v) = self.f_memo.get(&(m, k)) {
            return v.clone();
        }
        let v = if m == -1 || k == 0 {
            Rat::one()
        } else if self.closed_regime(m, k) {
            Self::pow2(m + 3) * &self.c + Rat::from(Int::from(16))
        } else {
            let base = Self::pow2(m + 3) * &self.c + Rat::from(Int::from(16));
            let n2 = (0..=k).map(|i| self.f(m - 1, i)).max().unwrap();
            let n3 = (k + 1..=2 * k).map(|i| self.f(m, i)).max().unwrap();
            let gamma = self.gamma(m, k);
            let delta = self.delta(m, k);
            let spread = delta - gamma;
            let tail = Rat::from(Int::from(3 * k as i64 + 3)) / spread;
            base.max(n2).max(n3).max(tail)
        };
        self.f_memo.insert((m, k), v.clone());
        v
    }

    /// `h(C,m) = max(2^{m+1}C + 8, max_{1≤k<2^m C} f(C,m,k))`.
    pub fn h(&mut self, m: u32) -> Rat {
        let base = Self::pow2(m as i32 + 1) * &self.c + Rat::from(Int::from(8));
        let mut best = base;
        let mut k = 1u32;
        while Rat::from(Int::from(k)) < Self::pow2(m as i32) * &self.c {
            let f = self.f(m as i32, k);
            if f > best {
                best = f;
            }
            k += 1;
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn base_cases() {
        let mut calc = ThresholdCalc::new(rat(3, 2)).unwrap();
        for k in 0..=8 {
            assert_eq!(calc.f(-1, k), Rat::one());
        }
        for m in 0..=3 {
            assert_eq!(calc.f(m, 0), Rat::one());
        }
        assert!(ThresholdCalc::new(rat(1, 2)).is_err());
    }

    #[test]
    fn h_at_one_zero() {
        let mut calc = ThresholdCalc::new(Rat::one()).unwrap();
        // No level range below 2^0·1 = 1, so h(1,0) = 2·1 + 8.
        assert_eq!(calc.h(0), rat(10, 1));
    }

    #[test]
    fn exponents_stay_in_their_bands() {
        let mut calc = ThresholdCalc::new(rat(2, 1)).unwrap();
        for m in 0..=3i32 {
            for k in 1..=16u32 {
                let d = calc.delta(m, k);
                assert!(d >= ThresholdCalc::pow2(-(m + 1)), "m={} k={}", m, k);
                assert!(d < ThresholdCalc::pow2(-m), "m={} k={}", m, k);
            }
        }
    }

    #[test]
    fn finite_positive_and_monotone_in_c() {
        let grid = [
            rat(1, 1),
            rat(3, 2),
            rat(2, 1),
            rat(5, 2),
            rat(3, 1),
            rat(4, 1),
        ];
        for m in 0..=3i32 {
            for k in 0..=32u32 {
                let mut prev: Option<Rat> = None;
                for c in &grid {
                    let mut calc = ThresholdCalc::new(c.clone()).unwrap();
                    let f = calc.f(m, k);
                    assert!(f >= Rat::one());
                    if let Some(p) = prev {
                        assert!(f >= p, "f(C,{},{}) must not decrease in C", m, k);
                    }
                    prev = Some(f);
                }
            }
        }
    }

    #[test]
    fn h_dominates_its_floor() {
        for c in [rat(1, 1), rat(2, 1), rat(4, 1)] {
            for m in 0..=3u32 {
                let mut calc = ThresholdCalc::new(c.clone()).unwrap();
                let floor = ThresholdCalc::pow2(m as i32 + 1) * &c + rat(8, 1);
                assert!(calc.h(m) >= floor);
            }
        }
    }
}
