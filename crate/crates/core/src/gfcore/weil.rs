//! Weil character values and eigenspace invariants.
//!
//! The total Weil character of `GL^ε_n(q)` takes the value
//! `ε^n (εq)^{dim Ker(g−1)}` at `g`, the kernel dimension being over the base
//! field of the natural module. Its grading by central characters gives the
//! per-component values; components sum back to the total.

use super::field::Field;
use super::group::GroupSpec;
use super::matrix::{factor_poly, Mat};
use crate::cyc::{Cyc, CycRat};
use crate::Int;

/// `ε^n (εq)^{dim Ker(g−1)}`.
pub fn weil_value(spec: &GroupSpec, g: &Mat, field: &Field) -> Int {
    let d = g.fixed_space_dim(field) as u32;
    weil_value_from_dim(spec, d)
}

/// Same, from a precomputed kernel dimension.
pub fn weil_value_from_dim(spec: &GroupSpec, d: u32) -> Int {
    let eq = Int::from(spec.eps.as_i64() * spec.q as i64);
    Int::from(spec.eps.pow(spec.n)) * eq.pow(d)
}

/// Degree `q^n` of the total Weil character.
pub fn weil_total_degree(spec: &GroupSpec) -> Int {
    Int::from(spec.q).pow(spec.n)
}

/// The value at `g` of the component of the total Weil character on which
/// the centre `μ_{q−ε}` acts by the `psi_index`-th power of the canonical
/// central character:
/// `(1/(q−ε)) Σ_{t} ζ^{−k·t} · ε^n (εq)^{dim Ker(g − c^t)}`
/// where `c` is the smallest-coded generator of `μ_{q−ε}`.
///
/// The result is an exact cyclotomic number of order `q−ε`; summing over all
/// `psi_index` returns the total Weil value.
pub fn weil_component_value(spec: &GroupSpec, psi_index: u32, g: &Mat, field: &Field) -> CycRat {
    let m = center_order(spec);
    let order = m as u32;
    let gen = field.smallest_primitive_root_of_unity(m);
    let mut num = Cyc::zero(order.max(1));
    let mut scalar = field.one();
    for t in 0..m as u32 {
        // dim Ker(g - c^t · 1)
        let shifted = g.sub(&Mat::diag(&vec![scalar; g.n]), field);
        let d = shifted.kernel_dim(field) as u32;
        let v = weil_value_from_dim(spec, d);
        // ζ^{-k t} coefficient
        let k = ((psi_index as u64 * t as u64) % m) as u32;
        num = num.add(&Cyc::root_of_unity(
            order.max(1),
            (order - k % order) % order,
            v,
        ));
        scalar = field.mul(scalar, gen);
    }
    CycRat::new(num, Int::from(m))
}

/// Order of the centre: `q − ε`.
pub fn center_order(spec: &GroupSpec) -> u64 {
    (spec.q as i64 - spec.eps.as_i64()) as u64
}

/// `δ(g)`: the largest eigenspace dimension of `g` over the algebraic
/// closure, i.e. `max_f dim Ker f(g) / deg f` over irreducible factors `f`
/// of the characteristic polynomial.
pub fn delta_max_eigenspace(g: &Mat, field: &Field) -> u32 {
    let cp = g.char_poly(field);
    let mut best = 0u32;
    for (f, _mult) in factor_poly(&cp, field) {
        let deg = (f.len() - 1) as u32;
        let ev = super::matrix::poly_at_matrix(&f, g, field);
        let kd = ev.kernel_dim(field) as u32;
        debug_assert!(
            kd % deg == 0,
            "kernel of an irreducible factor splits into Galois orbits"
        );
        best = best.max(kd / deg);
    }
    best
}

/// `dim Ker(g ⊗ s − 1)` over the common base field.
pub fn kron_fixed_dim(g: &Mat, s: &Mat, field: &Field) -> u32 {
    g.kron(s, field).fixed_space_dim(field) as u32
}

/// Scalar matrices form the centre of the general group; used to exclude
/// central elements from value scans.
pub fn is_central(g: &Mat) -> bool {
    let n = g.n;
    let c = g[(0, 0)];
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { c } else { 0 };
            if g[(i, j)] != expect {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::field::field_make;
    use crate::gfcore::group::enumerate_group;

    #[test]
    fn weil_value_at_identity_and_fpf() {
        let gl = GroupSpec::gl(3, 2);
        let k = field_make(2, 1).unwrap();
        assert_eq!(weil_value(&gl, &Mat::identity(3), &k), Int::from(8));

        let gu = GroupSpec::gu(3, 2);
        let k4 = field_make(2, 2).unwrap();
        assert_eq!(weil_value(&gu, &Mat::identity(3), &k4), Int::from(8));
        // Fixed-point-free element of odd-rank unitary group: value -1.
        assert_eq!(weil_value_from_dim(&gu, 0), Int::from(-1));
    }

    #[test]
    fn components_sum_to_total() {
        for spec in [GroupSpec::gl(2, 3), GroupSpec::gu(2, 2)] {
            let g = enumerate_group(&spec).unwrap();
            for c in &g.classes {
                let rep = g.class_rep(g.classes.iter().position(|x| x.rep == c.rep).unwrap());
                let total = weil_value(&spec, rep, &g.field);
                let m = center_order(&spec) as u32;
                let mut sum = CycRat::zero(m.max(1));
                for k in 0..m {
                    sum = sum.add(&weil_component_value(&spec, k, rep, &g.field));
                }
                assert_eq!(sum.as_rational().unwrap(), crate::Rat::from(total));
            }
        }
    }

    #[test]
    fn trivial_component_degree_gl23() {
        // At the identity of GL_2(3) the centre-trivial component has degree
        // (q^n + q - 2)/(q - 1) = 5: the principal character twice plus the
        // one-step reflection character of degree 3.
        let spec = GroupSpec::gl(2, 3);
        let k = field_make(3, 1).unwrap();
        let v = weil_component_value(&spec, 0, &Mat::identity(2), &k);
        assert_eq!(v.as_rational().unwrap(), crate::Rat::from(Int::from(5)));
    }

    #[test]
    fn delta_cases() {
        let k = field_make(3, 1).unwrap();
        assert_eq!(delta_max_eigenspace(&Mat::diag(&[2, 2, 2]), &k), 3);
        // Transvection: Jordan type (2,1) at eigenvalue 1.
        let t = Mat::from_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(delta_max_eigenspace(&t, &k), 2);
        // Companion matrix of the irreducible cubic t^3 + 2t + 1 over F_3:
        // a single Galois orbit of simple eigenvalues.
        let c = Mat::from_rows(&[&[0, 0, 2], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(delta_max_eigenspace(&c, &k), 1);
    }

    #[test]
    fn kron_jordan_blocks() {
        // J_a tensor J_b decomposes into min(a,b) Jordan blocks.
        let k = field_make(5, 1).unwrap();
        for a in 1..=4usize {
            for b in 1..=4usize {
                let ja = jordan_block(a);
                let jb = jordan_block(b);
                assert_eq!(kron_fixed_dim(&ja, &jb, &k), a.min(b) as u32);
            }
        }

        fn jordan_block(n: usize) -> Mat {
            let mut m = Mat::identity(n);
            for i in 0..n - 1 {
                m[(i, i + 1)] = 1;
            }
            m
        }
    }
}
