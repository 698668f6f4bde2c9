//! Burnside orbit counting on vector tuples and on pairs of linear maps.

use super::group::{enumerate_group, GroupData, GroupSpec};
use super::weil::kron_fixed_dim;
use crate::error::Result;
use crate::Int;
use num_traits::Zero;

/// Number of group orbits on ordered `j`-tuples of vectors of the natural
/// module, by Burnside's lemma: an element with fixed space of dimension `d`
/// fixes `Q^{dj}` tuples.
pub fn tuple_orbit_count(group: &GroupData, j: u32) -> Int {
    let big_q = Int::from(group.spec.base_field_size());
    let mut total = Int::zero();
    for (ci, class) in group.classes.iter().enumerate() {
        let d = group.class_rep(ci).fixed_space_dim(&group.field) as u32;
        total += Int::from(class.size) * big_q.pow(d * j);
    }
    let order = Int::from(group.order());
    let (count, rem) = num_integer::Integer::div_rem(&total, &order);
    assert!(
        rem.is_zero(),
        "Burnside sum must be divisible by the group order"
    );
    count
}

/// Convenience wrapper enumerating the group first.
pub fn tuple_orbit_count_oracle(spec: &GroupSpec, j: u32) -> Result<Int> {
    let group = enumerate_group(spec)?;
    Ok(tuple_orbit_count(&group, j))
}

/// Number of `GL_j(q) × GL_n(q)` orbits on ordered pairs of linear maps
/// `U → W` (`dim U = j`, `dim W = n`), by Burnside: the pair `(s, g)` fixes
/// `q^{dim Ker(g ⊗ ᵗs^{−1} − 1)}` maps, squared for pairs of maps.
pub fn pencil_orbit_oracle(j: u32, n: u32, q: u64) -> Result<Int> {
    let side = enumerate_group(&GroupSpec::gl(j, q))?;
    let main = enumerate_group(&GroupSpec::gl(n, q))?;
    let field = &main.field;
    let big_q = Int::from(q);
    let mut total = Int::zero();
    for (si, sclass) in side.classes.iter().enumerate() {
        let s = side.class_rep(si);
        let s_t_inv = s.inverse(&side.field).expect("group element").transpose();
        for (gi, gclass) in main.classes.iter().enumerate() {
            let g = main.class_rep(gi);
            let d = kron_fixed_dim(g, &s_t_inv, field);
            let fixed_pairs = big_q.pow(2 * d);
            total += Int::from(sclass.size) * Int::from(gclass.size) * fixed_pairs;
        }
    }
    let order = Int::from(side.order()) * Int::from(main.order());
    let (count, rem) = num_integer::Integer::div_rem(&total, &order);
    assert!(
        rem.is_zero(),
        "Burnside sum must be divisible by the group order"
    );
    Ok(count)
}
