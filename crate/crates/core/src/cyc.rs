//! Exact cyclotomic numbers.
//!
//! A value is a finite integer combination `Σ c_k ζ_e^k` of `e`-th roots of
//! unity, stored sparsely. Equality and zero tests reduce the coefficient
//! vector modulo the `e`-th cyclotomic polynomial, which gives the canonical
//! coordinates in the basis `{ζ_e^k : k < φ(e)}`. `CycRat` adds a single
//! integer denominator for inner products and probabilities.

use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// `Σ c_k ζ_order^k` with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyc {
    order: u32,
    coeffs: BTreeMap<u32, Int>,
}

impl Cyc {
    pub fn zero(order: u32) -> Cyc {
        assert!(order >= 1);
        Cyc {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_int(order: u32, v: Int) -> Cyc {
        let mut c = Cyc::zero(order);
        c.add_term(0, v);
        c
    }

    /// `c · ζ_order^k`.
    pub fn root_of_unity(order: u32, k: u32, c: Int) -> Cyc {
        let mut v = Cyc::zero(order);
        v.add_term(k % order, c);
        v
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_term(&mut self, k: u32, v: Int) {
        if v.is_zero() {
            return;
        }
        let k = k % self.order;
        let entry = self.coeffs.entry(k).or_insert_with(Int::zero);
        *entry += v;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Re-express in a multiple of the current order.
    pub fn embed(&self, new_order: u32) -> Cyc {
        assert!(
            new_order % self.order == 0,
            "embedding requires a multiple order"
        );
        let scale = new_order / self.order;
        let mut out = Cyc::zero(new_order);
        for (&k, v) in &self.coeffs {
            out.add_term(k * scale, v.clone());
        }
        out
    }

    pub fn add(&self, rhs: &Cyc) -> Cyc {
        assert_eq!(self.order, rhs.order);
        let mut out = self.clone();
        for (&k, v) in &rhs.coeffs {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Cyc) -> Cyc {
        assert_eq!(self.order, rhs.order);
        let mut out = self.clone();
        for (&k, v) in &rhs.coeffs {
            out.add_term(k, -v.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Cyc) -> Cyc {
        assert_eq!(self.order, rhs.order);
        let mut out = Cyc::zero(self.order);
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_term((i + j) % self.order, a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &Int) -> Cyc {
        if c.is_zero() {
            return Cyc::zero(self.order);
        }
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self) -> Cyc {
        let mut out = Cyc::zero(self.order);
        for (&k, v) in &self.coeffs {
            out.add_term((self.order - k) % self.order, v.clone());
        }
        out
    }

    /// `|v|² = v · conj(v)`; real and nonnegative.
    pub fn abs_sq(&self) -> Cyc {
        self.mul(&self.conj())
    }

    pub fn pow(&self, mut e: u64) -> Cyc {
        let mut base = self.clone();
        let mut acc = Cyc::from_int(self.order, Int::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Canonical coordinates: remainder modulo the cyclotomic polynomial,
    /// length `φ(order)`.
    pub fn reduced(&self) -> Vec<Int> {
        let phi = cyclotomic_poly(self.order);
        let deg = phi.len() - 1;
        let mut dense = vec![Int::zero(); self.order as usize];
        for (&k, v) in &self.coeffs {
            dense[k as usize] += v;
        }
        // Divide by the monic integer polynomial phi, keep the remainder.
        for k in (deg..dense.len()).rev() {
            if dense[k].is_zero() {
                continue;
            }
            let q = dense[k].clone();
            for (i, c) in phi.iter().enumerate() {
                dense[k - deg + i] -= &q * c;
            }
        }
        dense.truncate(deg);
        dense
    }

    pub fn is_zero(&self) -> bool {
        if self.coeffs.is_empty() {
            return true;
        }
        self.reduced().iter().all(|c| c.is_zero())
    }

    pub fn equals(&self, rhs: &Cyc) -> bool {
        self.sub(rhs).is_zero()
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_int(&self) -> Option<Int> {
        let red = self.reduced();
        if red.iter().skip(1).all(|c| c.is_zero()) {
            Some(red.first().cloned().unwrap_or_else(Int::zero))
        } else {
            None
        }
    }

    /// Exact division by a nonzero integer, requiring all canonical
    /// coordinates to stay integral.
    pub fn exact_div_int(&self, d: &Int) -> Option<Cyc> {
        assert!(!d.is_zero());
        let red = self.reduced();
        let mut out = Cyc::zero(self.order);
        for (k, c) in red.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&c, d);
            if !r.is_zero() {
                return None;
            }
            out.add_term(k as u32, q);
        }
        Some(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Int)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Floating approximation `(re, im)`; for reporting only, never for
    /// exact decisions.
    pub fn approx(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let mut re = 0f64;
        let mut im = 0f64;
        for (k, v) in &self.coeffs {
            let angle = 2.0 * std::f64::consts::PI * (*k as f64) / (self.order as f64);
            let c = v.to_f64().unwrap_or(0.0);
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, v) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}*z{}^{}", v, self.order, k)?;
            }
        }
        Ok(())
    }
}

/// Cyclotomic number with a single positive integer denominator.
#[derive(Clone, Debug)]
pub struct CycRat {
    pub num: Cyc,
    pub den: Int,
}

impl CycRat {
    pub fn zero(order: u32) -> CycRat {
        CycRat {
            num: Cyc::zero(order),
            den: Int::one(),
        }
    }

    pub fn from_cyc(num: Cyc) -> CycRat {
        CycRat {
            num,
            den: Int::one(),
        }
    }

    pub fn new(num: Cyc, den: Int) -> CycRat {
        assert!(!den.is_zero());
        if den.is_negative() {
            CycRat {
                num: num.scale(&Int::from(-1)),
                den: -den,
            }
        } else {
            CycRat { num, den }
        }
    }

    pub fn add(&self, rhs: &CycRat) -> CycRat {
        CycRat::new(
            self.num.scale(&rhs.den).add(&rhs.num.scale(&self.den)),
            &self.den * &rhs.den,
        )
    }

    pub fn mul(&self, rhs: &CycRat) -> CycRat {
        CycRat::new(self.num.mul(&rhs.num), &self.den * &rhs.den)
    }

    pub fn scale_rat(&self, r: &Rat) -> CycRat {
        CycRat::new(self.num.scale(r.numer()), &self.den * r.denom())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The rational number this value equals, if it is one.
    pub fn as_rational(&self) -> Option<Rat> {
        let i = self.num.as_int()?;
        Some(Rat::new(i, self.den.clone()))
    }
}

/// Coefficients of the `e`-th cyclotomic polynomial, ascending, monic.
pub fn cyclotomic_poly(e: u32) -> Vec<Int> {
    static MEMO: OnceLock<Mutex<HashMap<u32, Vec<Int>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = memo.lock().unwrap().get(&e) {
        return p.clone();
    }
    // x^e - 1 divided by the product of the lower cyclotomic polynomials.
    let mut num = vec![Int::zero(); e as usize + 1];
    num[0] = -Int::one();
    num[e as usize] = Int::one();
    for d in 1..e {
        if e % d != 0 {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        num = exact_poly_div(&num, &phi_d);
    }
    memo.lock().unwrap().insert(e, num.clone());
    num
}

fn exact_poly_div(num: &[Int], den: &[Int]) -> Vec<Int> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![Int::zero(); nd - dd + 1];
    for k in (0..quot.len()).rev() {
        let q = rem[k + dd].clone();
        if q.is_zero() {
            continue;
        }
        // den is monic here.
        for (i, c) in den.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}
