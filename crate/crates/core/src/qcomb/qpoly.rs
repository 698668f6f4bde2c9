//! Integer-coefficient polynomials in the indeterminate `q`.
//!
//! Coefficients are stored in ascending degree with no trailing zero; the
//! degree of the zero polynomial is `None`. Exact division failures panic:
//! every division performed by the crate is exact by construction, so a
//! remainder is an internal defect rather than a user error.

use crate::Int;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `q` with `Int` coefficients, ascending degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Int>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![Int::one()],
        }
    }

    /// The monomial `c·q^k`.
    pub fn monomial(c: Int, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    /// From ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn constant(c: Int) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `q^a − s·q^b` with sign `s = ±1`; the building block of all group-order
    /// and hook-quotient products.
    pub fn power_diff(a: usize, sign: i64, b: usize) -> Self {
        let mut coeffs = vec![Int::zero(); a.max(b) + 1];
        coeffs[a] += Int::one();
        coeffs[b] -= Int::from(sign);
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    /// Exact evaluation at an arbitrary integer (negative included).
    pub fn eval(&self, z: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Substitute `q ↦ q^d`.
    pub fn compose_q_power(&self, d: usize) -> QPoly {
        assert!(d >= 1);
        let mut coeffs = vec![Int::zero(); self.coeffs.len().saturating_sub(1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Exact division; panics when the division leaves a remainder.
    pub fn exact_div(&self, div: &QPoly) -> QPoly {
        assert!(!div.is_zero(), "exact_div by zero polynomial");
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        let dd = div.coeffs.len() - 1;
        let lead = div.coeffs.last().unwrap();
        let nd = rem.len() - 1;
        assert!(nd >= dd, "exact_div: degree of divisor exceeds dividend");
        let mut quot = vec![Int::zero(); nd - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = num_integer::Integer::div_rem(&top, lead);
            assert!(
                r.is_zero(),
                "exact_div: leading coefficient does not divide"
            );
            for (i, dc) in div.coeffs.iter().enumerate() {
                rem[k + i] -= &qc * dc;
            }
            quot[k] = qc;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "exact_div: nonzero remainder is an internal defect"
        );
        QPoly::from_coeffs(quot)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![Int::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![Int::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

// Serialized as the ascending coefficient list with decimal-string entries,
// so consumers never truncate at 64 bits.
impl serde::Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            coeffs.push(s.parse::<Int>().map_err(serde::de::Error::custom)?);
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*q", c)?,
                _ => write!(f, "{}*q^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn arithmetic_and_trim() {
        let a = poly(&[1, 2, 3]);
        let b = poly(&[0, 0, -3]);
        assert_eq!((&a + &b).degree(), Some(1));
        assert_eq!(&(&a - &a), &QPoly::zero());
        assert_eq!((&a * &QPoly::one()), a);
    }

    #[test]
    fn exact_division_round_trip() {
        let a = poly(&[-1, 0, 0, 1]); // q^3 - 1
        let b = poly(&[-1, 1]); // q - 1
        let q = a.exact_div(&b);
        assert_eq!(q, poly(&[1, 1, 1]));
        assert_eq!(&(&q * &b), &a);
    }

    #[test]
    #[should_panic(expected = "internal defect")]
    fn inexact_division_panics() {
        let a = poly(&[1, 0, 1]);
        let b = poly(&[-1, 1]);
        let _ = a.exact_div(&b);
    }

    #[test]
    fn eval_at_negative_argument() {
        let p = poly(&[1, 1]); // q + 1
        assert_eq!(p.eval(&Int::from(-2)), Int::from(-1));
        let d = QPoly::power_diff(3, 1, 0); // q^3 - 1
        assert_eq!(d.eval(&Int::from(-2)), Int::from(-9));
    }

    #[test]
    fn serde_round_trip() {
        let p = poly(&[3, 0, -2]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"["3","0","-2"]"#);
        assert_eq!(serde_json::from_str::<QPoly>(&js).unwrap(), p);
    }

    #[test]
    fn compose_q_power_squares_argument() {
        let p = poly(&[1, 1]); // q + 1
        let p2 = p.compose_q_power(2); // q^2 + 1
        assert_eq!(p2.eval(&Int::from(3)), Int::from(10));
    }
}
