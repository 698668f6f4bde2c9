//! Linear algebra and polynomial root finding over `Z/ℓ` for the character
//! table engine. `ℓ` always fits in 62 bits, so products go through `u128`.

use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug)]
pub struct Modulus(pub u64);

impl Modulus {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.0 != 0, "inverse of zero mod {}", self.0);
        self.pow(a, self.0 - 2)
    }

    /// Square root mod an odd prime by Tonelli-Shanks; `None` for
    /// non-residues.
    pub fn sqrt(self, a: u64) -> Option<u64> {
        let p = self.0;
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow(a, (p + 1) / 4));
        }
        // Tonelli-Shanks.
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while self.pow(z, (p - 1) / 2) == 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }
}

/// Dense matrix over `Z/ℓ`.
#[derive(Clone, Debug)]
pub struct ModMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ModMat {
    pub fn zero(rows: usize, cols: usize) -> ModMat {
        ModMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &ModMat, m: Modulus) -> ModMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = ModMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = m.add(out.at(i, j), m.mul(a, rhs.at(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Solve `self · X = rhs` for `X` when `self` has full column rank and
    /// the system is consistent. Panics otherwise: the caller guarantees the
    /// invariant.
    pub fn solve(&self, rhs: &ModMat, m: Modulus) -> ModMat {
        assert_eq!(self.rows, rhs.rows);
        let rows = self.rows;
        let cols = self.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        let mut pivot_row_of_col = vec![usize::MAX; cols];
        let mut r = 0usize;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| a.at(i, c) != 0) else {
                panic!("solve: matrix does not have full column rank");
            };
            a.swap_rows(r, p);
            b.swap_rows(r, p);
            let inv = m.inv(a.at(r, c));
            for j in 0..cols {
                a.set(r, j, m.mul(a.at(r, j), inv));
            }
            for j in 0..b.cols {
                b.set(r, j, m.mul(b.at(r, j), inv));
            }
            for i in 0..rows {
                if i != r && a.at(i, c) != 0 {
                    let f = a.at(i, c);
                    for j in 0..cols {
                        let v = m.sub(a.at(i, j), m.mul(f, a.at(r, j)));
                        a.set(i, j, v);
                    }
                    for j in 0..b.cols {
                        let v = m.sub(b.at(i, j), m.mul(f, b.at(r, j)));
                        b.set(i, j, v);
                    }
                }
            }
            pivot_row_of_col[c] = r;
            r += 1;
        }
        // Consistency: remaining rows of b must vanish.
        for i in r..rows {
            for j in 0..b.cols {
                assert_eq!(b.at(i, j), 0, "solve: inconsistent system");
            }
        }
        let mut x = ModMat::zero(cols, rhs.cols);
        for c in 0..cols {
            let pr = pivot_row_of_col[c];
            for j in 0..rhs.cols {
                x.set(c, j, b.at(pr, j));
            }
        }
        x
    }

    /// Basis of the null space, as columns.
    pub fn null_space(&self, m: Modulus) -> ModMat {
        let rows = self.rows;
        let cols = self.cols;
        let mut a = self.clone();
        let mut pivot_col_of_row = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| a.at(i, c) != 0) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = m.inv(a.at(r, c));
            for j in 0..cols {
                a.set(r, j, m.mul(a.at(r, j), inv));
            }
            for i in 0..rows {
                if i != r && a.at(i, c) != 0 {
                    let f = a.at(i, c);
                    for j in 0..cols {
                        let v = m.sub(a.at(i, j), m.mul(f, a.at(r, j)));
                        a.set(i, j, v);
                    }
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
        }
        let pivot_set: std::collections::HashSet<usize> =
            pivot_col_of_row.iter().copied().collect();
        let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = ModMat::zero(cols, free.len());
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(fc, bi, 1);
            for (ri, &pc) in pivot_col_of_row.iter().enumerate() {
                let v = a.at(ri, fc);
                if v != 0 {
                    basis.set(pc, bi, m.sub(0, v));
                }
            }
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Characteristic polynomial (ascending, monic) via Hessenberg reduction.
    pub fn char_poly(&self, m: Modulus) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        for col in 0..n.saturating_sub(2) {
            let Some(p) = (col + 1..n).find(|&r| h.at(r, col) != 0) else {
                continue;
            };
            if p != col + 1 {
                h.swap_rows(col + 1, p);
                h.swap_cols(col + 1, p);
            }
            let pi = m.inv(h.at(col + 1, col));
            for r in col + 2..n {
                if h.at(r, col) == 0 {
                    continue;
                }
                let f = m.mul(h.at(r, col), pi);
                for j in 0..n {
                    let v = m.sub(h.at(r, j), m.mul(f, h.at(col + 1, j)));
                    h.set(r, j, v);
                }
                for i in 0..n {
                    let v = m.add(h.at(i, col + 1), m.mul(f, h.at(i, r)));
                    h.set(i, col + 1, v);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let prev = &polys[k - 1];
            let c = h.at(k - 1, k - 1);
            let mut pk = vec![0u64; prev.len() + 1];
            for (i, &a) in prev.iter().enumerate() {
                pk[i + 1] = m.add(pk[i + 1], a);
                pk[i] = m.sub(pk[i], m.mul(c, a));
            }
            let mut subdiag = 1u64;
            for i in (1..k).rev() {
                subdiag = m.mul(subdiag, h.at(i, i - 1));
                let coeff = m.mul(h.at(i - 1, k - 1), subdiag);
                if coeff != 0 {
                    for (t, &a) in polys[i - 1].iter().enumerate() {
                        pk[t] = m.sub(pk[t], m.mul(coeff, a));
                    }
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

/// All roots in `Z/ℓ` of a polynomial whose roots all lie in `Z/ℓ`
/// (deduplicated). Deterministic given the seed.
pub fn roots_mod(poly: &[u64], m: Modulus, rng: &mut SplitMix64) -> Vec<u64> {
    let f = trim(poly.to_vec());
    assert!(f.len() >= 2, "constant polynomial has no roots");
    // Squarefree part with all roots: gcd(f, x^ℓ - x).
    let xl = poly_powmod(&[0, 1], m.0, &f, m);
    let xl_minus_x = poly_sub(&xl, &[0, 1], m);
    let g = poly_gcd(&f, &xl_minus_x, m);
    let mut roots = Vec::new();
    split_roots(&g, m, rng, &mut roots);
    roots.sort_unstable();
    roots
}

fn split_roots(g: &[u64], m: Modulus, rng: &mut SplitMix64, out: &mut Vec<u64>) {
    let g = trim(g.to_vec());
    match g.len() {
        0 | 1 => {}
        2 => {
            // c0 + c1 x = 0.
            let root = m.mul(m.sub(0, g[0]), m.inv(g[1]));
            out.push(root);
        }
        _ => loop {
            let a = rng.below(m.0);
            // h = gcd(g, (x+a)^{(ℓ-1)/2} - 1)
            let base = [a, 1];
            let pw = poly_powmod(&base, (m.0 - 1) / 2, &g, m);
            let pw1 = poly_sub(&pw, &[1], m);
            let h = poly_gcd(&g, &pw1, m);
            if h.len() > 1 && h.len() < g.len() {
                let quot = poly_div(&g, &h, m);
                split_roots(&h, m, rng, out);
                split_roots(&quot, m, rng, out);
                return;
            }
        },
    }
}

fn trim(mut p: Vec<u64>) -> Vec<u64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[u64], b: &[u64], m: Modulus) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] = m.add(out[i], x);
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] = m.sub(out[i], x);
    }
    trim(out)
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], m: Modulus) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = m.add(prod[i + j], m.mul(x, y));
        }
    }
    poly_rem(&prod, f, m)
}

fn poly_rem(p: &[u64], f: &[u64], m: Modulus) -> Vec<u64> {
    let mut rem = p.to_vec();
    let df = f.len() - 1;
    let lead_inv = m.inv(f[df]);
    while rem.len() > df {
        let k = rem.len() - 1;
        let c = m.mul(rem[k], lead_inv);
        if c != 0 {
            for i in 0..=df {
                let v = m.sub(rem[k - df + i], m.mul(c, f[i]));
                rem[k - df + i] = v;
            }
        }
        rem.pop();
    }
    trim(rem)
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], m: Modulus) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, m);
        }
        e >>= 1;
        if e > 0 {
            b = poly_mulmod(&b, &b, f, m);
        }
    }
    acc
}

/// Exact quotient (the division is known to be exact at the call site).
fn poly_div(num: &[u64], den: &[u64], m: Modulus) -> Vec<u64> {
    let dd = den.len() - 1;
    let lead_inv = m.inv(den[dd]);
    let mut rem = num.to_vec();
    let mut quot = vec![0u64; num.len() - dd];
    for idx in (0..quot.len()).rev() {
        let c = m.mul(rem[idx + dd], lead_inv);
        quot[idx] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[idx + i] = m.sub(rem[idx + i], m.mul(c, dc));
            }
        }
    }
    debug_assert!(rem.iter().all(|&v| v == 0), "poly_div: nonzero remainder");
    quot
}

fn poly_gcd(a: &[u64], b: &[u64], m: Modulus) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, m);
        a = b;
        b = r;
    }
    // Normalize monic.
    if let Some(&lead) = a.last() {
        let inv = m.inv(lead);
        for c in a.iter_mut() {
            *c = m.mul(*c, inv);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_mod_prime() {
        let m = Modulus(2521);
        for a in [1u64, 4, 9, 100, 2025] {
            let r = m.sqrt(a).unwrap();
            assert_eq!(m.mul(r, r), a % 2521);
        }
    }

    #[test]
    fn null_space_and_solve() {
        let m = Modulus(101);
        let mut a = ModMat::zero(3, 3);
        // Rank-2 matrix.
        let rows = [[1u64, 2, 3], [4, 5, 6], [7, 8, 9]];
        for i in 0..3 {
            for j in 0..3 {
                a.set(i, j, rows[i][j]);
            }
        }
        let ns = a.null_space(m);
        assert_eq!(ns.cols, 1);
        let prod = a.mul(&ns, m);
        assert!(prod.data.iter().all(|&v| v == 0));
    }

    #[test]
    fn roots_of_split_polynomial() {
        let m = Modulus(97);
        // (x-3)(x-5)(x-10) mod 97.
        let f = vec![m.sub(0, 150 % 97), 95, m.sub(0, 18), 1];
        let mut rng = SplitMix64::new(1);
        let roots = roots_mod(&f, m, &mut rng);
        assert_eq!(roots, vec![3, 5, 10]);
    }

    #[test]
    fn char_poly_of_diagonal() {
        let m = Modulus(101);
        let mut a = ModMat::zero(2, 2);
        a.set(0, 0, 4);
        a.set(1, 1, 9);
        // (x-4)(x-9) = x^2 - 13x + 36.
        assert_eq!(a.char_poly(m), vec![36, m.sub(0, 13), 1]);
    }
}
