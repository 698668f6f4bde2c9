//! Zeta-based mixing bounds for class random walks.
//!
//! For elements with small enough centralizer the walk distance to uniform is
//! bounded by a Witten zeta tail: `‖P^t − U‖_∞ ≤ ζ(t/9 − 2) − 1` and
//! `‖P^t − U‖₁² ≤ ζ(2t/9 − 2) − 1`, valid only when the exponent exceeds
//! `2/n`. Out-of-hypothesis parameters are refused rather than extrapolated.

use crate::census::{witten_zeta, RealEnclosure};
use crate::error::{Error, Result};
use crate::{Int, Rat};
use num_traits::One;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkNorm {
    SupScaled,
    L1Squared,
}

/// The zeta exponent used by the bound for walk length `t`.
pub fn mixing_exponent(norm: WalkNorm, t: u32) -> Rat {
    let t = Rat::from(Int::from(t));
    match norm {
        WalkNorm::SupScaled => t / Rat::from(Int::from(9)) - Rat::from(Int::from(2)),
        WalkNorm::L1Squared => {
            Rat::from(Int::from(2)) * t / Rat::from(Int::from(9)) - Rat::from(Int::from(2))
        }
    }
}

/// `ζ(exponent) − 1` over the given degree multiset, provided the hypothesis
/// `exponent > 2/n` holds.
pub fn mixing_bound(
    degrees: &BTreeMap<Int, u64>,
    n: u32,
    t: u32,
    norm: WalkNorm,
) -> Result<RealEnclosure> {
    let s = mixing_exponent(norm, t);
    let hypothesis = Rat::new(Int::from(2), Int::from(n));
    if s <= hypothesis {
        return Err(Error::HypothesisViolated(format!(
            "zeta exponent {} does not exceed 2/n = {}",
            s, hypothesis
        )));
    }
    let z = witten_zeta(degrees, &s, false)?;
    Ok(RealEnclosure {
        lo: z.lo - Rat::one(),
        hi: z.hi - Rat::one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees() -> BTreeMap<Int, u64> {
        [
            (Int::from(1), 1),
            (Int::from(3), 2),
            (Int::from(4), 1),
            (Int::from(5), 1),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn hypothesis_is_enforced() {
        // n = 19, t = 19: exponent 1/9 > 2/19 holds.
        assert!(mixing_bound(&degrees(), 19, 19, WalkNorm::SupScaled).is_ok());
        // t = 18 gives exponent 0, refused.
        assert!(mixing_bound(&degrees(), 19, 18, WalkNorm::SupScaled).is_err());
        // n = 10, t = 10: exponent 2/9 > 2/10 holds for the 1-norm bound.
        assert!(mixing_bound(&degrees(), 10, 10, WalkNorm::L1Squared).is_ok());
        assert!(mixing_bound(&degrees(), 9, 10, WalkNorm::L1Squared).is_err());
    }

    #[test]
    fn bound_decreases_with_t() {
        let a = mixing_bound(&degrees(), 19, 19, WalkNorm::SupScaled).unwrap();
        let b = mixing_bound(&degrees(), 19, 28, WalkNorm::SupScaled).unwrap();
        assert!(b.hi < a.lo);
    }
}
