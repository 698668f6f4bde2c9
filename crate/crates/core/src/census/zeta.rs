//! Witten zeta values `Σ χ(1)^{−s}` with certified enclosures.
//!
//! Rational `s = p/r` needs `r`-th roots, so the value is returned as an
//! exact rational interval of relative width below `10^{−12}` (exact point
//! value when `s` is an integer). Accumulation is big-rational; rounding
//! happens once at rendering time.

use crate::error::{Error, Result};
use crate::{Int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Certified enclosure `lo ≤ value ≤ hi` of a positive real.
#[derive(Clone, Debug, PartialEq)]
pub struct RealEnclosure {
    pub lo: Rat,
    pub hi: Rat,
}

impl RealEnclosure {
    pub fn exact(v: Rat) -> RealEnclosure {
        RealEnclosure {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Midpoint rendered with the given number of decimal digits.
    pub fn decimal(&self, digits: u32) -> String {
        let scale = Int::from(10).pow(digits);
        let mid = (&self.lo + &self.hi) / Rat::from(Int::from(2));
        let scaled = (mid * Rat::from(scale.clone())).round().to_integer();
        let negative = scaled.is_negative();
        let digits_str = scaled.abs().to_string();
        let pad = (digits as usize + 1).saturating_sub(digits_str.len());
        let padded = "0".repeat(pad) + &digits_str;
        let split = padded.len() - digits as usize;
        format!(
            "{}{}.{}",
            if negative { "-" } else { "" },
            &padded[..split],
            &padded[split..]
        )
    }
}

/// `Σ count·d^{−s}` over a degree multiset, optionally dropping one trivial
/// character (degree 1).
pub fn witten_zeta(
    degrees: &BTreeMap<Int, u64>,
    s: &Rat,
    exclude_trivial: bool,
) -> Result<RealEnclosure> {
    let mut degrees = degrees.clone();
    if exclude_trivial {
        match degrees.get_mut(&Int::one()) {
            Some(c) if *c > 0 => {
                *c -= 1;
                if *c == 0 {
                    degrees.remove(&Int::one());
                }
            }
            _ => {
                return Err(Error::InvalidInput(
                    "no trivial character to exclude from the zeta sum".into(),
                ));
            }
        }
    }
    let mut lo = Rat::zero();
    let mut hi = Rat::zero();
    for (d, count) in &degrees {
        if d.is_zero() || d.is_negative() {
            return Err(Error::InvalidInput(
                "character degrees must be positive".into(),
            ));
        }
        let term = power_enclosure(d, &-s.clone())?;
        let c = Rat::from(Int::from(*count));
        lo += &c * term.lo;
        hi += &c * term.hi;
    }
    Ok(RealEnclosure { lo, hi })
}

/// Enclosure of `base^e` for positive integer `base` and rational `e`,
/// relative width below `10^{−14}`.
pub fn power_enclosure(base: &Int, e: &Rat) -> Result<RealEnclosure> {
    assert!(base.is_positive());
    if base.is_one() {
        return Ok(RealEnclosure::exact(Rat::one()));
    }
    let p = e.numer().clone();
    let r = e
        .denom()
        .to_u32()
        .ok_or_else(|| Error::InvalidInput("exponent denominator too large".into()))?;
    let p_abs = p
        .abs()
        .to_u32()
        .ok_or_else(|| Error::InvalidInput("exponent numerator too large".into()))?;
    // Integer power, then r-th root with guard digits.
    let int_pow = base.pow(p_abs);
    let value = if r == 1 {
        RealEnclosure::exact(Rat::from(int_pow.clone()))
    } else {
        // floor((int_pow · S^r)^{1/r}) / S with scale S = 10^18 encloses the
        // root within 1/S absolute, hence well below 10^-14 relative for
        // base >= 2.
        let scale = Int::from(10).pow(18u32);
        let scaled = &int_pow * scale.pow(r);
        let root = scaled.nth_root(r);
        let lo = Rat::new(root.clone(), scale.clone());
        let hi = Rat::new(root + Int::one(), scale);
        RealEnclosure { lo, hi }
    };
    if p.is_negative() {
        Ok(RealEnclosure {
            lo: hi_recip(&value.hi),
            hi: hi_recip(&value.lo),
        })
    } else {
        Ok(value)
    }
}

fn hi_recip(v: &Rat) -> Rat {
    Rat::one() / v.clone()
}
