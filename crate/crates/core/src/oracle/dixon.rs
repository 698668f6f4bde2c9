//! Exact character tables by the Dixon-Schneider method.
//!
//! Pipeline: class multiplication coefficients over the integers; common
//! eigenvectors of the class matrices modulo a prime `ℓ ≡ 1 (mod exponent)`
//! with `ℓ > 2√|G|`; degrees from the orthogonality relation and a modular
//! square root; lifting to exact cyclotomic values through eigenvalue
//! multiplicities (a discrete Fourier transform over the power map); and a
//! final exact validation of both orthogonality relations before the table is
//! returned.

use super::modular::{roots_mod, ModMat, Modulus};
use crate::cyc::{cyclotomic_poly, Cyc};
use crate::error::{Error, Result};
use crate::gfcore::{GroupData, GroupSpec, Mat};
use crate::rng::SplitMix64;
use crate::Int;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// One irreducible character: degree plus one exact cyclotomic value per
/// class.
#[derive(Clone, Debug)]
pub struct CharRow {
    pub degree: Int,
    pub values: Vec<Cyc>,
}

/// Exact character table of a concrete group.
pub struct CharTable {
    pub spec: GroupSpec,
    pub order: u64,
    pub exponent: u64,
    pub class_reps: Vec<Mat>,
    pub class_sizes: Vec<u64>,
    pub centralizer_orders: Vec<Int>,
    /// Multiplicative order of each class representative.
    pub class_rep_orders: Vec<u64>,
    /// Class of the inverse of each class representative.
    pub inverse_class: Vec<u32>,
    /// `power_classes[c][t]` is the class of `rep_c^t`, `0 ≤ t < order(rep_c)`.
    pub power_classes: Vec<Vec<u32>>,
    pub chars: Vec<CharRow>,
}

impl CharTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn num_chars(&self) -> usize {
        self.chars.len()
    }

    /// Index of the class of the identity.
    pub fn identity_class(&self) -> usize {
        self.class_sizes
            .iter()
            .enumerate()
            .position(|(c, &s)| s == 1 && self.class_rep_orders[c] == 1)
            .expect("identity class exists")
    }

    /// Rows of degree one.
    pub fn linear_rows(&self) -> Vec<usize> {
        self.chars
            .iter()
            .enumerate()
            .filter(|(_, r)| r.degree.is_one())
            .map(|(i, _)| i)
            .collect()
    }

    /// Exact inner product `(1/|G|) Σ_c |C_c| · f(c) · conj(g(c))` of two
    /// class functions given as per-class cyclotomic values, which must be an
    /// integer (true for products of characters).
    pub fn inner_product_int(&self, f: &[Cyc], g: &[Cyc]) -> Int {
        let mut acc = Cyc::zero(self.exponent as u32);
        for c in 0..self.num_classes() {
            let term = f[c]
                .mul(&g[c].conj())
                .scale(&Int::from(self.class_sizes[c]));
            acc = acc.add(&term);
        }
        let v = acc
            .exact_div_int(&Int::from(self.order))
            .and_then(|c| c.as_int())
            .expect("inner product of characters is a rational integer");
        v
    }

    pub fn degrees_multiset(&self) -> std::collections::BTreeMap<Int, u64> {
        let mut out = std::collections::BTreeMap::new();
        for row in &self.chars {
            *out.entry(row.degree.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// Compute the validated character table of an enumerated group.
pub fn dixon_table(group: &GroupData) -> Result<CharTable> {
    let k = group.num_classes();
    if k > 120 {
        return Err(Error::GuardExceeded(format!(
            "{} classes exceed the table guard",
            k
        )));
    }
    let order_int = group.spec.order();
    let order = order_int.to_u64().expect("guarded order fits u64");

    // Power maps, element orders, exponent.
    let mut rep_orders = Vec::with_capacity(k);
    let mut power_classes: Vec<Vec<u32>> = Vec::with_capacity(k);
    for c in 0..k {
        let rep = group.class_rep(c).clone();
        let o = group.element_order(&rep);
        let mut pc = Vec::with_capacity(o as usize);
        let mut cur = Mat::identity(rep.n);
        for _ in 0..o {
            pc.push(group.class_of_matrix(&cur).expect("closed under powers"));
            cur = cur.mul(&rep, &group.field);
        }
        rep_orders.push(o);
        power_classes.push(pc);
    }
    let exponent = rep_orders.iter().fold(1u64, |a, &b| a.lcm(&b));
    let inverse_class: Vec<u32> = (0..k)
        .map(|c| {
            let o = rep_orders[c] as usize;
            power_classes[c][(o - 1) % o.max(1)]
        })
        .collect();

    // Modular setup: smallest prime ℓ ≡ 1 (mod exponent), ℓ > 2√|G|.
    let ell = {
        let mut t = 1u64;
        loop {
            let cand = exponent * t + 1;
            if cand * cand > 4 * order && crate::gfcore::is_prime_u64(cand) {
                break cand;
            }
            t += 1;
        }
    };
    let m = Modulus(ell);
    debug_assert!(order % ell != 0);

    // Class multiplication coefficients a_{ijk} = #{x in C_i : x^{-1} z_k in C_j}.
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (e, &c) in group.class_of.iter().enumerate() {
        members[c as usize].push(e as u32);
    }
    let mut class_mats: Vec<ModMat> = (0..k).map(|_| ModMat::zero(k, k)).collect();
    let reps: Vec<Mat> = (0..k).map(|c| group.class_rep(c).clone()).collect();
    for i in 0..k {
        let mat = &mut class_mats[i];
        for &x in &members[i] {
            let xm = &group.elements[x as usize];
            let x_inv = xm.inverse(&group.field).expect("group element");
            for (kk, rep) in reps.iter().enumerate() {
                let prod = x_inv.mul(rep, &group.field);
                let j = group.class_of_matrix(&prod).expect("closed") as usize;
                let v = m.add(mat.at(j, kk), 1);
                mat.set(j, kk, v);
            }
        }
    }

    // Split the common eigenspaces. Blocks hold k-dimensional column bases.
    let mut rng = SplitMix64::new(0x0dcb_5eed ^ ell);
    let mut blocks: Vec<ModMat> = vec![identity_mat(k)];
    for a in &class_mats {
        let mut next: Vec<ModMat> = Vec::new();
        for block in blocks {
            if block.cols == 1 {
                next.push(block);
                continue;
            }
            // Restriction M with a·block = block·M.
            let ab = a.mul(&block, m);
            let restriction = block.solve(&ab, m);
            let cp = restriction.char_poly(m);
            let roots = roots_mod(&cp, m, &mut rng);
            if roots.len() == 1 {
                next.push(block);
                continue;
            }
            for &lam in &roots {
                let mut shifted = restriction.clone();
                for d in 0..shifted.rows {
                    let v = m.sub(shifted.at(d, d), lam);
                    shifted.set(d, d, v);
                }
                let kernel = shifted.null_space(m);
                assert!(kernel.cols >= 1);
                next.push(block.mul(&kernel, m));
            }
        }
        blocks = next;
        if blocks.iter().all(|b| b.cols == 1) {
            break;
        }
    }
    if blocks.len() != k {
        return Err(Error::InvalidInput(format!(
            "eigenspace splitting found {} characters instead of {}: internal defect",
            blocks.len(),
            k
        )));
    }

    // Normalize by the identity-class coordinate: u_j = |C_j| χ(g_j)/χ(1) mod ℓ.
    let id_class = (0..k)
        .position(|c| group.classes[c].size == 1 && rep_orders[c] == 1)
        .expect("identity class exists");
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for b in &blocks {
        let pivot = b.at(id_class, 0);
        assert!(
            pivot != 0,
            "eigenvector must be supported on the identity class"
        );
        let inv = m.inv(pivot);
        omegas.push((0..k).map(|j| m.mul(b.at(j, 0), inv)).collect());
    }

    // Degrees: χ(1)^2 = |G| / Σ_j u_j u_{j*} / |C_j| (mod ℓ), then the unique
    // square root below √|G|.
    let order_mod = order % ell;
    let mut degrees_mod = Vec::with_capacity(k);
    let mut degrees = Vec::with_capacity(k);
    for u in &omegas {
        let mut s = 0u64;
        for j in 0..k {
            let term = m.mul(u[j], u[inverse_class[j] as usize]);
            s = m.add(s, m.mul(term, m.inv(group.classes[j].size % ell)));
        }
        let d_sq = m.mul(order_mod, m.inv(s));
        let r = m.sqrt(d_sq).expect("degree squared is a quadratic residue");
        let d = r.min(ell - r);
        assert!(d * d <= order, "degree must not exceed sqrt(|G|)");
        degrees_mod.push(d % ell);
        degrees.push(d);
    }

    // Lift values: χ(g_j) = Σ_t m_t ζ_e^{(e/o) t} with multiplicities from a
    // DFT over the cyclic group generated by g_j.
    let gen = primitive_root(ell);
    let zeta = m.pow(gen, (ell - 1) / exponent);
    let e32 = u32::try_from(exponent).expect("exponent fits u32");
    let mut chars: Vec<CharRow> = Vec::with_capacity(k);
    for (chi, u) in omegas.iter().enumerate() {
        let chi_mod = |j: usize| -> u64 {
            m.mul(
                degrees_mod[chi],
                m.mul(u[j], m.inv(group.classes[j].size % ell)),
            )
        };
        let mut values = Vec::with_capacity(k);
        for j in 0..k {
            let o = rep_orders[j];
            let w = m.pow(zeta, exponent / o);
            let w_inv = m.inv(w);
            let o_inv = m.inv(o % ell);
            let mut value = Cyc::zero(e32);
            for t in 0..o {
                let mut s = 0u64;
                let mut wp = 1u64;
                let step = m.pow(w_inv, t);
                for idx in 0..o {
                    let cls = power_classes[j][idx as usize] as usize;
                    s = m.add(s, m.mul(chi_mod(cls), wp));
                    wp = m.mul(wp, step);
                }
                let mult = m.mul(s, o_inv);
                assert!(
                    mult <= degrees[chi],
                    "eigenvalue multiplicity exceeds the degree: internal defect"
                );
                if mult > 0 {
                    value.add_term(((exponent / o) * t) as u32 % e32, Int::from(mult));
                }
            }
            values.push(value);
        }
        chars.push(CharRow {
            degree: Int::from(degrees[chi]),
            values,
        });
    }

    // Canonical row order: by degree, then by reduced value vectors.
    chars.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            for (x, y) in a.values.iter().zip(b.values.iter()) {
                let c = x.reduced().cmp(&y.reduced());
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
    });

    let table = CharTable {
        spec: group.spec,
        order,
        exponent,
        class_reps: reps,
        class_sizes: group.classes.iter().map(|c| c.size).collect(),
        centralizer_orders: group
            .classes
            .iter()
            .map(|c| c.centralizer_order.clone())
            .collect(),
        class_rep_orders: rep_orders,
        inverse_class,
        power_classes,
        chars,
    };
    validate(&table)?;
    Ok(table)
}

/// Exact orthogonality validation; any failure is an internal defect
/// surfaced as an error.
fn validate(table: &CharTable) -> Result<()> {
    let k = table.num_classes();
    let e = table.exponent as usize;
    let phi = cyclotomic_poly(table.exponent as u32);
    let id = table.identity_class();

    // Degree consistency: value at the identity equals the degree.
    for row in &table.chars {
        if row.values[id].as_int().as_ref() != Some(&row.degree) {
            return Err(Error::InvalidInput(
                "character value at the identity differs from the degree".into(),
            ));
        }
    }
    let sq_sum: Int = table.chars.iter().map(|r| &r.degree * &r.degree).sum();
    if sq_sum != Int::from(table.order) {
        return Err(Error::InvalidInput(
            "degree squares do not sum to the group order".into(),
        ));
    }

    // Cheap dense accumulator: coefficients are eigenvalue multiplicities
    // bounded by sqrt(|G|), so every product fits comfortably in i128.
    let as_small = |c: &Cyc| -> Vec<(usize, i128)> {
        c.terms()
            .map(|(kk, v)| (kk as usize, v.to_i128().expect("small multiplicity")))
            .collect()
    };
    let rows_small: Vec<Vec<Vec<(usize, i128)>>> = table
        .chars
        .iter()
        .map(|r| r.values.iter().map(&as_small).collect())
        .collect();

    let reduces_to = |acc: &[i128], expect: &Int| -> bool {
        let mut dense: Vec<Int> = acc.iter().map(|&v| Int::from(v)).collect();
        dense[0] -= expect;
        // Remainder modulo the cyclotomic polynomial must vanish.
        let deg = phi.len() - 1;
        for kk in (deg..dense.len()).rev() {
            if dense[kk].is_zero() {
                continue;
            }
            let q = dense[kk].clone();
            for (i, c) in phi.iter().enumerate() {
                dense[kk - deg + i] -= &q * c;
            }
        }
        dense.iter().all(|c| c.is_zero())
    };

    // Row orthogonality: Σ_c |C_c| χ_i(c) χ_j(c^{-1}) = δ_ij |G|.
    for i in 0..k {
        for j in i..k {
            let mut acc = vec![0i128; e];
            for c in 0..k {
                let w = table.class_sizes[c] as i128;
                let a = &rows_small[i][c];
                let b = &rows_small[j][table.inverse_class[c] as usize];
                for &(ka, va) in a {
                    for &(kb, vb) in b {
                        acc[(ka + kb) % e] += va * vb * w;
                    }
                }
            }
            let expect = if i == j {
                Int::from(table.order)
            } else {
                Int::zero()
            };
            if !reduces_to(&acc, &expect) {
                return Err(Error::InvalidInput(format!(
                    "row orthogonality failed for characters {} and {}",
                    i, j
                )));
            }
        }
    }

    // Column orthogonality: Σ_i χ_i(c) χ_i(c'^{-1}) = δ_{cc'} |C(c)|.
    for c in 0..k {
        for c2 in c..k {
            let mut acc = vec![0i128; e];
            for i in 0..k {
                let a = &rows_small[i][c];
                let b = &rows_small[i][table.inverse_class[c2] as usize];
                for &(ka, va) in a {
                    for &(kb, vb) in b {
                        acc[(ka + kb) % e] += va * vb;
                    }
                }
            }
            let expect = if c == c2 {
                table.centralizer_orders[c].clone()
            } else {
                Int::zero()
            };
            if !reduces_to(&acc, &expect) {
                return Err(Error::InvalidInput(format!(
                    "column orthogonality failed for classes {} and {}",
                    c, c2
                )));
            }
        }
    }
    Ok(())
}

fn identity_mat(k: usize) -> ModMat {
    let mut m = ModMat::zero(k, k);
    for i in 0..k {
        m.set(i, i, 1);
    }
    m
}

fn primitive_root(ell: u64) -> u64 {
    let phi = ell - 1;
    let factors = crate::gfcore::factorize_u64(phi);
    let m = Modulus(ell);
    'cand: for g in 2..ell {
        for &f in &factors {
            if m.pow(g, phi / f) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("prime fields have primitive roots");
}
