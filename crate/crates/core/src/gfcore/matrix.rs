//! Dense matrices over a concrete finite field.
//!
//! Entries are field codes (see [`super::field`]). All algorithms are exact:
//! Gaussian elimination for rank/kernel/inverse/determinant, Hessenberg
//! reduction for characteristic polynomials, and trial division for their
//! factorization into irreducibles.

use super::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    pub data: Vec<u32>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Mat{}x{}{:?}", self.n, self.n, self.data)
    }
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        Mat {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[&[u32]]) -> Mat {
        let n = rows.len();
        let mut m = Mat::zero(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n);
            for (j, &v) in r.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn diag(entries: &[u32]) -> Mat {
        let mut m = Mat::zero(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn mul(&self, rhs: &Mat, k: &Field) -> Mat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self[(i, l)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs[(l, j)];
                    if b != 0 {
                        out[(i, j)] = k.add(out[(i, j)], k.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Entry-wise `x ↦ x^e` (used for the unitary involution with `e = q`).
    pub fn entrywise_pow(&self, e: u64, k: &Field) -> Mat {
        Mat {
            n: self.n,
            data: self.data.iter().map(|&x| k.pow(x, e)).collect(),
        }
    }

    /// Scale every entry by `c`.
    pub fn scale(&self, c: u32, k: &Field) -> Mat {
        Mat {
            n: self.n,
            data: self.data.iter().map(|&x| k.mul(x, c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Mat, k: &Field) -> Mat {
        assert_eq!(self.n, rhs.n);
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(&a, &b)| k.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat, k: &Field) -> Mat {
        assert_eq!(self.n, rhs.n);
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(&a, &b)| k.sub(a, b))
                .collect(),
        }
    }

    pub fn rank(&self, k: &Field) -> usize {
        let n = self.n;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| m[(r, col)] != 0);
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            let inv = k.inv(m[(rank, col)]);
            for j in col..n {
                m[(rank, j)] = k.mul(m[(rank, j)], inv);
            }
            for r in 0..n {
                if r != rank && m[(r, col)] != 0 {
                    let f = m[(r, col)];
                    for j in col..n {
                        let s = k.mul(f, m[(rank, j)]);
                        m[(r, j)] = k.sub(m[(r, j)], s);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn kernel_dim(&self, k: &Field) -> usize {
        self.n - self.rank(k)
    }

    /// `dim Ker(self − 1)`.
    pub fn fixed_space_dim(&self, k: &Field) -> usize {
        self.sub(&Mat::identity(self.n), k).kernel_dim(k)
    }

    pub fn inverse(&self, k: &Field) -> Option<Mat> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[(r, col)] != 0)?;
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let pi = k.inv(m[(col, col)]);
            for j in 0..n {
                m[(col, j)] = k.mul(m[(col, j)], pi);
                inv[(col, j)] = k.mul(inv[(col, j)], pi);
            }
            for r in 0..n {
                if r != col && m[(r, col)] != 0 {
                    let f = m[(r, col)];
                    for j in 0..n {
                        let s = k.mul(f, m[(col, j)]);
                        m[(r, j)] = k.sub(m[(r, j)], s);
                        let s2 = k.mul(f, inv[(col, j)]);
                        inv[(r, j)] = k.sub(inv[(r, j)], s2);
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn det(&self, k: &Field) -> u32 {
        let n = self.n;
        let mut m = self.clone();
        let mut det = k.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[(r, col)] != 0) else {
                return 0;
            };
            if pivot != col {
                m.swap_rows(col, pivot);
                det = k.neg(det);
            }
            det = k.mul(det, m[(col, col)]);
            let pi = k.inv(m[(col, col)]);
            for r in col + 1..n {
                if m[(r, col)] != 0 {
                    let f = k.mul(m[(r, col)], pi);
                    for j in col..n {
                        let s = k.mul(f, m[(col, j)]);
                        m[(r, j)] = k.sub(m[(r, j)], s);
                    }
                }
            }
        }
        det
    }

    /// Kronecker product, row-major blocks.
    pub fn kron(&self, rhs: &Mat, k: &Field) -> Mat {
        let n = self.n * rhs.n;
        let mut out = Mat::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self[(i, j)];
                if a == 0 {
                    continue;
                }
                for r in 0..rhs.n {
                    for c in 0..rhs.n {
                        let v = k.mul(a, rhs[(r, c)]);
                        out[(i * rhs.n + r, j * rhs.n + c)] = v;
                    }
                }
            }
        }
        out
    }

    /// Characteristic polynomial, ascending coefficients over the field,
    /// monic of degree n; computed via Hessenberg reduction.
    pub fn char_poly(&self, k: &Field) -> Vec<u32> {
        let n = self.n;
        let mut h = self.clone();
        // Similarity reduction to upper Hessenberg form with pivoting.
        for col in 0..n.saturating_sub(2) {
            let pivot = (col + 1..n).find(|&r| h[(r, col)] != 0);
            let Some(p) = pivot else { continue };
            if p != col + 1 {
                h.swap_rows(col + 1, p);
                h.swap_cols(col + 1, p);
            }
            let pi = k.inv(h[(col + 1, col)]);
            for r in col + 2..n {
                if h[(r, col)] == 0 {
                    continue;
                }
                let f = k.mul(h[(r, col)], pi);
                // row_r -= f * row_{col+1}
                for j in 0..n {
                    let s = k.mul(f, h[(col + 1, j)]);
                    h[(r, j)] = k.sub(h[(r, j)], s);
                }
                // col_{col+1} += f * col_r (inverse transformation)
                for i in 0..n {
                    let s = k.mul(f, h[(i, r)]);
                    h[(i, col + 1)] = k.add(h[(i, col + 1)], s);
                }
            }
        }
        // p_0 = 1; p_m = (x - h_mm) p_{m-1} - Σ h_{i,m} (Π subdiag) p_{i-1}.
        let mut polys: Vec<Vec<u32>> = vec![vec![k.one()]];
        for m in 1..=n {
            let mut pm = poly_mul_linear(&polys[m - 1], h[(m - 1, m - 1)], k);
            let mut subdiag = k.one();
            for i in (1..m).rev() {
                subdiag = k.mul(subdiag, h[(i, i - 1)]);
                let coeff = k.mul(h[(i - 1, m - 1)], subdiag);
                if coeff != 0 {
                    poly_sub_scaled(&mut pm, &polys[i - 1], coeff, k);
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.n;
        for j in 0..n {
            self.data.swap(a * n + j, b * n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.n;
        for i in 0..n {
            self.data.swap(i * n + a, i * n + b);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u32;
    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        &mut self.data[i * self.n + j]
    }
}

/// `(x - c) * p`, ascending coefficients.
fn poly_mul_linear(p: &[u32], c: u32, k: &Field) -> Vec<u32> {
    let mut out = vec![0u32; p.len() + 1];
    for (i, &a) in p.iter().enumerate() {
        out[i + 1] = k.add(out[i + 1], a);
        out[i] = k.sub(out[i], k.mul(c, a));
    }
    out
}

/// `p -= c * s`, in place (p at least as long as s).
fn poly_sub_scaled(p: &mut [u32], s: &[u32], c: u32, k: &Field) {
    for (i, &a) in s.iter().enumerate() {
        p[i] = k.sub(p[i], k.mul(c, a));
    }
}

/// Evaluate a polynomial (ascending field coefficients) at a matrix.
pub fn poly_at_matrix(p: &[u32], m: &Mat, k: &Field) -> Mat {
    let n = m.n;
    let mut acc = Mat::zero(n);
    for &c in p.iter().rev() {
        acc = acc.mul(m, k);
        if c != 0 {
            let cn = Mat::diag(&vec![c; n]);
            acc = acc.add(&cn, k);
        }
    }
    acc
}

/// Factor a monic polynomial over the field into `(irreducible, multiplicity)`
/// pairs by trial division in increasing degree. Divisors are scanned up to
/// half the remaining degree; the final remainder, if nonconstant, is itself
/// irreducible.
pub fn factor_poly(poly: &[u32], k: &Field) -> Vec<(Vec<u32>, u32)> {
    let mut rem = trim_poly(poly.to_vec());
    assert!(
        rem.len() >= 1 && *rem.last().unwrap() == 1,
        "factor_poly expects a monic polynomial"
    );
    let mut out: Vec<(Vec<u32>, u32)> = Vec::new();
    let mut d = 1usize;
    while rem.len() - 1 >= 2 * d {
        let total = k.size().pow(d as u32);
        for code in 0..total {
            let mut cand = vec![0u32; d + 1];
            let mut c = code;
            for e in cand.iter_mut().take(d) {
                *e = (c % k.size()) as u32;
                c /= k.size();
            }
            cand[d] = 1;
            let mut mult = 0;
            while let Some(q) = poly_div_exact(&rem, &cand, k) {
                rem = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
                if rem.len() - 1 < 2 * d {
                    break;
                }
            }
        }
        d += 1;
    }
    if rem.len() > 1 {
        out.push((rem, 1));
    }
    // Merge multiplicities in case the tail equals an earlier factor (cannot
    // happen: earlier factors were divided out completely).
    out
}

fn trim_poly(mut p: Vec<u32>) -> Vec<u32> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Exact polynomial division over the field (`den` monic), `None` when a
/// remainder is left.
fn poly_div_exact(num: &[u32], den: &[u32], k: &Field) -> Option<Vec<u32>> {
    let dd = den.len() - 1;
    if num.len() - 1 < dd {
        return None;
    }
    let mut rem = num.to_vec();
    let mut quot = vec![0u32; num.len() - dd];
    for idx in (0..quot.len()).rev() {
        let c = rem[idx + dd];
        if c == 0 {
            continue;
        }
        quot[idx] = c;
        for (i, &dc) in den.iter().enumerate() {
            let s = k.mul(c, dc);
            rem[idx + i] = k.sub(rem[idx + i], s);
        }
    }
    if rem.iter().all(|&c| c == 0) {
        Some(quot)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::field::field_make;

    #[test]
    fn rank_kernel_inverse() {
        let k = field_make(3, 1).unwrap();
        let m = Mat::from_rows(&[&[1, 2], &[0, 1]]);
        assert_eq!(m.rank(&k), 2);
        let inv = m.inverse(&k).unwrap();
        assert_eq!(m.mul(&inv, &k), Mat::identity(2));
        // det = 1 - 4 = 0 mod 3, so rank drops to 1.
        let sing = Mat::from_rows(&[&[1, 2], &[2, 1]]);
        assert_eq!(sing.rank(&k), 1);
        assert_eq!(sing.kernel_dim(&k), 1);
        assert!(sing.inverse(&k).is_none());
    }

    #[test]
    fn det_multiplicative() {
        let k = field_make(5, 1).unwrap();
        let a = Mat::from_rows(&[&[1, 2, 0], &[0, 3, 1], &[4, 0, 2]]);
        let b = Mat::from_rows(&[&[2, 1, 1], &[0, 0, 3], &[1, 2, 0]]);
        let dab = a.mul(&b, &k).det(&k);
        assert_eq!(dab, k.mul(a.det(&k), b.det(&k)));
    }

    #[test]
    fn char_poly_matches_brute_force() {
        // det(xI - A) by cofactor expansion over small fields.
        fn brute(m: &Mat, k: &Field) -> Vec<u32> {
            // Polynomial entries: represent as Vec<u32> ascending.
            fn pmul(a: &[u32], b: &[u32], k: &Field) -> Vec<u32> {
                let mut out = vec![0u32; a.len() + b.len() - 1];
                for (i, &x) in a.iter().enumerate() {
                    for (j, &y) in b.iter().enumerate() {
                        out[i + j] = k.add(out[i + j], k.mul(x, y));
                    }
                }
                out
            }
            fn padd(a: &[u32], b: &[u32], k: &Field) -> Vec<u32> {
                let mut out = vec![0u32; a.len().max(b.len())];
                for (i, &x) in a.iter().enumerate() {
                    out[i] = k.add(out[i], x);
                }
                for (i, &x) in b.iter().enumerate() {
                    out[i] = k.add(out[i], x);
                }
                out
            }
            fn pdet(rows: &[Vec<Vec<u32>>], k: &Field) -> Vec<u32> {
                let n = rows.len();
                if n == 1 {
                    return rows[0][0].clone();
                }
                let mut acc = vec![0u32];
                for j in 0..n {
                    let minor: Vec<Vec<Vec<u32>>> = rows[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(c, _)| c != j)
                                .map(|(_, p)| p.clone())
                                .collect()
                        })
                        .collect();
                    let mut term = pmul(&rows[0][j], &pdet(&minor, k), k);
                    if j % 2 == 1 {
                        term = term.iter().map(|&c| k.neg(c)).collect();
                    }
                    acc = padd(&acc, &term, k);
                }
                acc
            }
            let n = m.n;
            let rows: Vec<Vec<Vec<u32>>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                vec![k.neg(m[(i, j)]), 1]
                            } else {
                                vec![k.neg(m[(i, j)]), 0]
                            }
                        })
                        .collect()
                })
                .collect();
            let mut p = pdet(&rows, k);
            while p.len() < n + 1 {
                p.push(0);
            }
            p
        }

        let mut rng = crate::rng::SplitMix64::new(7);
        for &(p, f) in &[(2u32, 1u32), (3, 1), (2, 2)] {
            let k = field_make(p, f).unwrap();
            for n in 1..=5usize {
                for _ in 0..8 {
                    let mut m = Mat::zero(n);
                    for e in m.data.iter_mut() {
                        *e = rng.below(k.size()) as u32;
                    }
                    assert_eq!(m.char_poly(&k), brute(&m, &k), "matrix {:?}", m);
                }
            }
        }
    }

    #[test]
    fn factor_poly_round_trip() {
        let k = field_make(2, 1).unwrap();
        // x^4 + x = x (x+1) (x^2+x+1) over F_2.
        let p = vec![0, 1, 0, 0, 1];
        let factors = factor_poly(&p, &k);
        let degs: Vec<usize> = factors.iter().map(|(f, _)| f.len() - 1).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        let total: u32 = factors.iter().map(|(f, m)| (f.len() as u32 - 1) * m).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn kron_dimensions() {
        let k = field_make(2, 1).unwrap();
        let a = Mat::identity(2);
        let b = Mat::from_rows(&[&[1, 1], &[0, 1]]);
        let ab = a.kron(&b, &k);
        assert_eq!(ab.n, 4);
        assert_eq!(ab.fixed_space_dim(&k), 2);
    }
}
