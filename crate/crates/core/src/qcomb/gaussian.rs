//! Gaussian binomial coefficients, the finite q-binomial expansion of `t^m`,
//! and the elementary Hall-polynomial sum with its brute-force subgroup
//! oracle.

use super::partition::Partition;
use super::qpoly::QPoly;
use crate::error::{Error, Result};
use crate::Int;
use num_traits::{One, Zero};
use std::collections::HashSet;

/// Gaussian binomial `binom(m,k)_q = Π_{t<k}(q^m − q^t) / Π_{t<k}(q^k − q^t)`
/// as an exact integer polynomial.
pub fn gauss_binom(m: u32, k: u32) -> QPoly {
    assert!(k <= m, "gauss_binom requires 0 <= k <= m");
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for t in 0..k as usize {
        num = &num * &QPoly::power_diff(m as usize, 1, t);
        den = &den * &QPoly::power_diff(k as usize, 1, t);
    }
    num.exact_div(&den)
}

/// Evaluate `binom(m,k)_q` at an integer `z`; negative `z` supports the
/// `(−q)`-analogues used for unitary groups.
pub fn gauss_binom_eval(m: u32, k: u32, z: &Int) -> Int {
    assert!(k <= m, "gauss_binom_eval requires 0 <= k <= m");
    let mut num = Int::one();
    let mut den = Int::one();
    for t in 0..k {
        num *= z.pow(m) - z.pow(t);
        den *= z.pow(k) - z.pow(t);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(
        r.is_zero(),
        "gauss_binom_eval: inexact division is an internal defect"
    );
    q
}

/// Bivariate polynomial in `(t, q)`: coefficients of `t^i` are `QPoly`s.
#[derive(Clone, PartialEq, Eq, Debug)]
struct TqPoly {
    coeffs: Vec<QPoly>,
}

impl TqPoly {
    fn zero() -> Self {
        TqPoly { coeffs: Vec::new() }
    }

    fn t_power(i: usize) -> Self {
        let mut coeffs = vec![QPoly::zero(); i + 1];
        coeffs[i] = QPoly::one();
        TqPoly { coeffs }
    }

    fn from_qpoly(p: QPoly) -> Self {
        TqPoly { coeffs: vec![p] }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn add(&self, rhs: &TqPoly) -> TqPoly {
        let mut coeffs = vec![QPoly::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = &coeffs[i] + c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] = &coeffs[i] + c;
        }
        TqPoly { coeffs }.trim()
    }

    fn mul(&self, rhs: &TqPoly) -> TqPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return TqPoly::zero();
        }
        let mut coeffs = vec![QPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TqPoly { coeffs }.trim()
    }
}

/// Check the expansion `t^m = Σ_k binom(m,k)_q Π_{i<k}(t − q^i)` as an exact
/// bivariate polynomial identity.
pub fn z_identity_check(m: u32) -> bool {
    let mut rhs = TqPoly::zero();
    for k in 0..=m {
        let mut prod = TqPoly::from_qpoly(gauss_binom(m, k));
        for i in 0..k as usize {
            // t - q^i
            let factor = TqPoly {
                coeffs: vec![
                    &QPoly::zero() - &QPoly::monomial(Int::one(), i),
                    QPoly::one(),
                ],
            };
            prod = prod.mul(&factor);
        }
        rhs = rhs.add(&prod);
    }
    rhs == TqPoly::t_power(m as usize).trim()
}

/// Aggregate count of elementary abelian subgroups of rank `j` inside
/// `Ω_1(M)` for an abelian group of type `λ` with `k` parts, as the exact
/// value `Π_{i<j}(x^k − x^i) / Π_{i<j}(x^j − x^i)`; zero when `j > k`.
/// Negative `x` is supported.
pub fn hall_elementary_sum(lambda: &Partition, j: u32, x: &Int) -> Int {
    let k = lambda.len() as u32;
    if j > k {
        return Int::zero();
    }
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..j {
        num *= x.pow(k) - x.pow(i);
        den *= x.pow(j) - x.pow(i);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(
        r.is_zero(),
        "hall_elementary_sum: inexact division is an internal defect"
    );
    q
}

/// Brute-force count of elementary abelian rank-`j` subgroups of the abelian
/// `r`-group of type `λ`, by enumerating rank-`j` subspaces of `Ω_1(M)`.
///
/// Each subspace is constructed exactly once through its reduced row-echelon
/// basis (pivot columns strictly increasing, zeros above and below pivots,
/// free entries swept exhaustively), so the count is pure enumeration with no
/// division anywhere.
pub fn abelian_subgroup_oracle(lambda: &Partition, j: u32, r: u32) -> Result<u64> {
    let size: f64 = (r as f64).powi(lambda.size() as i32);
    if size > 1e6 {
        return Err(Error::GuardExceeded(format!(
            "abelian group of type {:?} over r={} has more than 10^6 elements",
            lambda, r
        )));
    }
    // Ω_1(M) for M = Π C_{r^{λ_i}} is elementary abelian of rank k =
    // number of parts; its points are k-tuples over Z/r.
    let k = lambda.len();
    if (j as usize) > k {
        return Ok(0);
    }
    if j == 0 {
        return Ok(1);
    }
    let j = j as usize;
    let mut count = 0u64;
    let mut pivots: Vec<usize> = (0..j).collect();
    loop {
        // Free positions for this pivot choice: entries to the right of each
        // pivot that are not themselves pivot columns.
        let mut free_positions = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            for col in p + 1..k {
                if !pivots.contains(&col) {
                    free_positions.push((row, col));
                }
            }
        }
        // Odometer over the free entries; every assignment is one subspace.
        let mut odometer = vec![0u32; free_positions.len()];
        loop {
            count += 1;
            let mut pos = 0;
            while pos < odometer.len() {
                odometer[pos] += 1;
                if odometer[pos] < r {
                    break;
                }
                odometer[pos] = 0;
                pos += 1;
            }
            if pos == odometer.len() {
                break;
            }
        }
        // Next strictly increasing pivot tuple.
        let mut i = j;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            if pivots[i] < k - (j - i) {
                pivots[i] += 1;
                for t in i + 1..j {
                    pivots[t] = pivots[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Independent re-count by closing point sets under addition; quadratic in
/// the subspace count and used only to cross-check the echelon enumeration on
/// small ranks.
pub fn subgroup_count_by_point_sets(k: usize, j: u32, r: u32) -> u64 {
    if (j as usize) > k {
        return 0;
    }
    if j == 0 {
        return 1;
    }
    let npoints = (r as u64).pow(k as u32) as usize;
    let decode = |mut idx: usize| -> Vec<u32> {
        let mut v = vec![0u32; k];
        for d in v.iter_mut() {
            *d = (idx % r as usize) as u32;
            idx /= r as usize;
        }
        v
    };
    let encode = |v: &[u32]| -> usize {
        let mut idx = 0usize;
        for d in v.iter().rev() {
            idx = idx * r as usize + *d as usize;
        }
        idx
    };
    let mut level: HashSet<Vec<usize>> = HashSet::new();
    level.insert(vec![0]);
    for _dim in 1..=j {
        let mut next: HashSet<Vec<usize>> = HashSet::new();
        for space in &level {
            let inside: HashSet<usize> = space.iter().copied().collect();
            for v in 1..npoints {
                if inside.contains(&v) {
                    continue;
                }
                let vd = decode(v);
                let mut pts: Vec<usize> = Vec::with_capacity(space.len() * r as usize);
                for &u in space {
                    let ud = decode(u);
                    for c in 0..r {
                        let w: Vec<u32> = ud
                            .iter()
                            .zip(vd.iter())
                            .map(|(&a, &b)| (a + c * b) % r)
                            .collect();
                        pts.push(encode(&w));
                    }
                }
                pts.sort_unstable();
                pts.dedup();
                next.insert(pts);
            }
        }
        level = next;
    }
    level.len() as u64
}
