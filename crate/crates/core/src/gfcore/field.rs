//! Concrete finite fields `F_{p^f}` with table-driven arithmetic.
//!
//! Elements are encoded as integers in `0..q`: the base-`p` digits of the
//! code are the coefficients of the residue polynomial, constant term first.
//! The modulus is the lexicographically smallest monic irreducible of degree
//! `f` (coefficient tuple order, constant term first), so codes are stable
//! across runs and machines. Multiplication goes through discrete-log tables
//! over a fixed generator.

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Field {
    p: u32,
    f: u32,
    q: u64,
    /// Monic irreducible modulus; length f+1, constant term first.
    modulus: Vec<u32>,
    /// exp[i] = code of g^i for 0 <= i < q-1, g the chosen generator.
    exp: Vec<u32>,
    /// log[code] = i with exp[i] = code; log[0] is unused.
    log: Vec<u32>,
    /// Full q*q addition table for small fields (empty above 256 elements).
    add_table: Vec<u32>,
    /// Full q*q multiplication table for small fields.
    mul_table: Vec<u32>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fm,
            "F_{}^{} (q={}, modulus={:?})",
            self.p, self.f, self.q, self.modulus
        )
    }
}

/// Build `F_{p^f}` with the canonical modulus. Guards: `p` prime,
/// `p^f ≤ 2^20`.
pub fn field_make(p: u32, f: u32) -> Result<Field> {
    if !is_prime_u64(p as u64) {
        return Err(Error::InvalidInput(format!("{} is not prime", p)));
    }
    if f == 0 {
        return Err(Error::InvalidInput(
            "extension degree must be positive".into(),
        ));
    }
    let q = (p as u64)
        .checked_pow(f)
        .filter(|&q| q <= 1 << 20)
        .ok_or_else(|| Error::GuardExceeded(format!("field size {}^{} exceeds 2^20", p, f)))?;
    let modulus = smallest_irreducible(p, f);
    let mut field = Field {
        p,
        f,
        q,
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
        add_table: Vec::new(),
        mul_table: Vec::new(),
    };
    field.build_log_tables();
    if q <= 256 {
        let q = q as u32;
        let mut add_table = vec![0u32; (q * q) as usize];
        let mut mul_table = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                add_table[(a * q + b) as usize] = field.add_slow(a, b);
                mul_table[(a * q + b) as usize] = field.mul_slow(a, b);
            }
        }
        field.add_table = add_table;
        field.mul_table = mul_table;
    }
    Ok(field)
}

impl Field {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.f
    }

    pub fn size(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Code of the chosen multiplicative generator (1 for the trivial unit
    /// group of F_2).
    pub fn generator(&self) -> u32 {
        if self.q == 2 {
            return 1;
        }
        self.exp[1]
    }

    fn decode(&self, a: u32) -> Vec<u32> {
        let mut digits = vec![0u32; self.f as usize];
        let mut a = a;
        for d in digits.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        digits
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        let mut a = 0u64;
        for &d in digits.iter().rev() {
            a = a * self.p as u64 + d as u64;
        }
        a as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if !self.add_table.is_empty() {
            return self.add_table[(a as u64 * self.q + b as u64) as usize];
        }
        self.add_slow(a, b)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.f == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        let da = self.decode(a);
        let db = self.decode(b);
        let sum: Vec<u32> = da
            .iter()
            .zip(db.iter())
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.f == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let da = self.decode(a);
        let neg: Vec<u32> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if !self.mul_table.is_empty() {
            return self.mul_table[(a as u64 * self.q + b as u64) as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let la = self.log[a as usize] as u64;
        let lb = self.log[b as usize] as u64;
        self.exp[((la + lb) % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let la = self.log[a as usize] as u64;
        self.exp[((self.q - 1 - la) % (self.q - 1)) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let la = self.log[a as usize] as u64;
        let le = (la % (self.q - 1)) * (e % (self.q - 1)) % (self.q - 1);
        self.exp[le as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> u64 {
        assert!(a != 0);
        let la = self.log[a as usize] as u64;
        let n = self.q - 1;
        n / num_integer::Integer::gcd(&n, &la)
    }

    /// All codes 0..q, zero first.
    pub fn all_elements(&self) -> impl Iterator<Item = u32> {
        0..self.q as u32
    }

    /// The subgroup `μ_m = {x : x^m = 1}`; requires `m | q−1`. Sorted by code.
    pub fn roots_of_unity(&self, m: u64) -> Vec<u32> {
        assert!(m >= 1 && (self.q - 1) % m == 0, "m must divide q-1");
        let step = (self.q - 1) / m;
        let mut v: Vec<u32> = (0..m).map(|i| self.exp[(i * step) as usize]).collect();
        v.sort_unstable();
        v
    }

    /// Smallest-coded generator of `μ_m` (deterministic across runs).
    pub fn smallest_primitive_root_of_unity(&self, m: u64) -> u32 {
        self.roots_of_unity(m)
            .into_iter()
            .find(|&x| self.element_order(x) == m)
            .expect("cyclic subgroup has a generator")
    }

    fn build_log_tables(&mut self) {
        let q = self.q as usize;
        // Polynomial multiplication mod the modulus, on digit vectors.
        let poly_mul = |a: &[u32], b: &[u32]| -> Vec<u32> {
            let f = self.f as usize;
            let mut prod = vec![0u64; 2 * f - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] += x as u64 * y as u64;
                }
            }
            // Reduce modulo the monic modulus.
            for k in (f..prod.len()).rev() {
                let c = prod[k] % self.p as u64;
                if c == 0 {
                    continue;
                }
                // x^k = x^{k-f} * (x^f) and x^f = -(lower part of modulus).
                for i in 0..f {
                    let m = self.modulus[i] as u64;
                    if m != 0 {
                        prod[k - f + i] += c * (self.p as u64 - m);
                    }
                }
                prod[k] = 0;
            }
            prod.truncate(f);
            prod.iter().map(|&c| (c % self.p as u64) as u32).collect()
        };

        // Find a generator: try codes in increasing order.
        let order = self.q - 1;
        let prime_factors = factorize_u64(order);
        'cand: for cand in 1..self.q as u32 {
            let digits = self.decode(cand);
            // Check order by excluding all maximal proper divisors.
            for &pf in &prime_factors {
                if pow_digits(&digits, order / pf, &poly_mul, self.f as usize)
                    == one_digits(self.f as usize)
                {
                    continue 'cand;
                }
            }
            // cand is a generator; build tables.
            let mut exp = vec![0u32; order as usize];
            let mut log = vec![0u32; q];
            let mut cur = one_digits(self.f as usize);
            for i in 0..order as usize {
                let code = self.encode(&cur);
                exp[i] = code;
                log[code as usize] = i as u32;
                cur = poly_mul(&cur, &digits);
            }
            self.exp = exp;
            self.log = log;
            return;
        }
        unreachable!("every finite field has a multiplicative generator");
    }
}

fn one_digits(f: usize) -> Vec<u32> {
    let mut v = vec![0u32; f];
    v[0] = 1;
    v
}

fn pow_digits(
    base: &[u32],
    mut e: u64,
    poly_mul: &impl Fn(&[u32], &[u32]) -> Vec<u32>,
    f: usize,
) -> Vec<u32> {
    let mut acc = one_digits(f);
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &b);
        }
        e >>= 1;
        if e > 0 {
            b = poly_mul(&b, &b);
        }
    }
    acc
}

/// Lexicographically smallest monic irreducible of degree `f` over `F_p`,
/// constant term first; found by trial division against lower-degree monic
/// polynomials.
fn smallest_irreducible(p: u32, f: u32) -> Vec<u32> {
    if f == 1 {
        // x + 0 is reducible-free by convention; use x itself? x has root 0,
        // but degree-1 polynomials are all irreducible; smallest is x.
        return vec![0, 1];
    }
    let f = f as usize;
    let total = (p as u64).pow(f as u32);
    'cand: for code in 0..total {
        let mut cand = vec![0u32; f + 1];
        let mut c = code;
        for d in cand.iter_mut().take(f) {
            *d = (c % p as u64) as u32;
            c /= p as u64;
        }
        cand[f] = 1;
        // Trial division by all monic polynomials of degree 1..=f/2.
        for d in 1..=f / 2 {
            let dt = (p as u64).pow(d as u32);
            for dcode in 0..dt {
                let mut div = vec![0u32; d + 1];
                let mut c = dcode;
                for dd in div.iter_mut().take(d) {
                    *dd = (c % p as u64) as u32;
                    c /= p as u64;
                }
                div[d] = 1;
                if poly_divides(&div, &cand, p) {
                    continue 'cand;
                }
            }
        }
        return cand;
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn poly_divides(div: &[u32], num: &[u32], p: u32) -> bool {
    let mut rem: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let dd = div.len() - 1;
    for k in (dd..rem.len()).rev() {
        let c = rem[k] % p as u64;
        if c == 0 {
            continue;
        }
        for i in 0..=dd {
            let m = div[i] as u64;
            if m != 0 {
                rem[k - dd + i] += c * (p as u64 - m);
            }
        }
        rem[k] = 0;
    }
    rem.iter().all(|&c| c % p as u64 == 0)
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn factorize_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f2 = field_make(2, 1).unwrap();
        assert_eq!(f2.size(), 2);
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f2.mul(1, 1), 1);
    }

    #[test]
    fn canonical_moduli() {
        // Unique irreducible quadratic over F_2: t^2 + t + 1.
        assert_eq!(field_make(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // Lex scan over F_3 quadratics finds t^2 + 1 first.
        assert_eq!(field_make(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert!(field_make(4, 1).is_err());
    }

    #[test]
    fn field_axioms_spot_check() {
        for (p, f) in [(2, 2), (3, 2), (2, 4), (5, 2), (7, 1)] {
            let k = field_make(p, f).unwrap();
            let q = k.size() as u32;
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    if a != 0 {
                        assert_eq!(k.mul(a, k.inv(a)), 1);
                    }
                    // Distributivity against a fixed third element.
                    let c = (a + b) % q;
                    assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn frobenius_has_order_f() {
        let k = field_make(3, 2).unwrap();
        // x -> x^3 fixes exactly F_3 and squares to identity.
        let mut fixed = 0;
        for a in 0..k.size() as u32 {
            if k.pow(a, 3) == a {
                fixed += 1;
            }
            assert_eq!(k.pow(k.pow(a, 3), 3), a);
        }
        assert_eq!(fixed, 3);
    }

    #[test]
    fn unit_subgroups() {
        let k = field_make(2, 2).unwrap(); // F_4
        let mu3 = k.roots_of_unity(3);
        assert_eq!(mu3.len(), 3);
        let g = k.smallest_primitive_root_of_unity(3);
        assert_eq!(k.element_order(g), 3);
    }
}
