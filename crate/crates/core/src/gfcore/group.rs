//! Small matrix groups by explicit enumeration.
//!
//! `GL_n(q)` and `SL_n(q)` are generated by transvections and a diagonal
//! torus generator; `GU_n(q)` (identity Gram matrix) by permutation matrices,
//! a diagonal `μ_{q+1}` generator and an embedded `GU_2(q)` block. Closure is
//! breadth-first and the final count is checked against the order formula, so
//! an insufficient generating set is a hard error rather than a wrong answer.
//!
//! Conjugacy classes are orbits under conjugation by the generators; class
//! sizes and centralizer orders follow from the class equation.

use super::field::{field_make, Field};
use super::matrix::Mat;
use crate::error::{Error, Result};
use crate::Int;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Default ceiling on full element enumeration.
pub const DEFAULT_ELEMENT_GUARD: u64 = 300_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `ε^k`.
    pub fn pow(self, k: u32) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if k % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Names `GL^ε_n(q)` or `SL^ε_n(q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupSpec {
    pub eps: Sign,
    pub n: u32,
    pub q: u64,
    pub special: bool,
}

impl GroupSpec {
    pub fn gl(n: u32, q: u64) -> GroupSpec {
        GroupSpec {
            eps: Sign::Plus,
            n,
            q,
            special: false,
        }
    }

    pub fn gu(n: u32, q: u64) -> GroupSpec {
        GroupSpec {
            eps: Sign::Minus,
            n,
            q,
            special: false,
        }
    }

    pub fn sl(n: u32, q: u64) -> GroupSpec {
        GroupSpec {
            special: true,
            ..Self::gl(n, q)
        }
    }

    pub fn su(n: u32, q: u64) -> GroupSpec {
        GroupSpec {
            special: true,
            ..Self::gu(n, q)
        }
    }

    pub fn general(self) -> GroupSpec {
        GroupSpec {
            special: false,
            ..self
        }
    }

    /// Size of the base field of the natural module: `q` for linear,
    /// `q²` for unitary groups.
    pub fn base_field_size(&self) -> u64 {
        match self.eps {
            Sign::Plus => self.q,
            Sign::Minus => self.q * self.q,
        }
    }

    /// `Π_{i=1..n}(q^i − ε^i) · q^{n(n−1)/2}`, divided by `q − ε` when special.
    pub fn order(&self) -> Int {
        let q = Int::from(self.q);
        let mut ord = Int::one();
        for i in 1..=self.n {
            let mut t = q.pow(i);
            t -= Int::from(self.eps.pow(i));
            ord *= t;
        }
        ord *= q.pow(self.n * (self.n - 1) / 2);
        if self.special {
            let d = Int::from(self.q as i64 - self.eps.as_i64());
            let (v, r) = num_integer::Integer::div_rem(&ord, &d);
            assert!(r.is_zero());
            ord = v;
        }
        ord
    }

    /// `p'`-part of the order: `Π_{i=1..n}(q^i − ε^i)`.
    pub fn order_p_prime(&self) -> Int {
        let q = Int::from(self.q);
        let mut ord = Int::one();
        for i in 1..=self.n {
            ord *= q.pow(i) - Int::from(self.eps.pow(i));
        }
        ord
    }

    /// Parse `"GL(2,3)"`, `"GU(3,2)"`, `"SL(2,4)"`, `"SU(2,2)"`.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let open = s
            .find('(')
            .ok_or_else(|| Error::InvalidInput(format!("bad group name: {}", s)))?;
        let kind = &s[..open];
        let rest = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::InvalidInput(format!("bad group name: {}", s)))?;
        let mut it = rest.split(',');
        let n: u32 = it
            .next()
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| Error::InvalidInput(format!("bad rank in: {}", s)))?;
        let q: u64 = it
            .next()
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| Error::InvalidInput(format!("bad field size in: {}", s)))?;
        if it.next().is_some() {
            return Err(Error::InvalidInput(format!("bad group name: {}", s)));
        }
        match kind {
            "GL" => Ok(GroupSpec::gl(n, q)),
            "GU" => Ok(GroupSpec::gu(n, q)),
            "SL" => Ok(GroupSpec::sl(n, q)),
            "SU" => Ok(GroupSpec::su(n, q)),
            _ => Err(Error::InvalidInput(format!("unknown group kind: {}", kind))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match (self.special, self.eps) {
            (false, Sign::Plus) => "GL",
            (false, Sign::Minus) => "GU",
            (true, Sign::Plus) => "SL",
            (true, Sign::Minus) => "SU",
        };
        write!(f, "{}({},{})", kind, self.n, self.q)
    }
}

/// One conjugacy class: representative index, size, centralizer order.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: u32,
    pub size: u64,
    pub centralizer_order: Int,
}

/// A fully enumerated group with its conjugacy classes.
pub struct GroupData {
    pub spec: GroupSpec,
    pub field: Field,
    pub elements: Vec<Mat>,
    index: HashMap<Vec<u32>, u32>,
    pub generators: Vec<u32>,
    pub classes: Vec<ConjClass>,
    /// Class id of every element.
    pub class_of: Vec<u32>,
}

impl GroupData {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn element_index(&self, m: &Mat) -> Option<u32> {
        self.index.get(&m.data).copied()
    }

    pub fn class_of_matrix(&self, m: &Mat) -> Option<u32> {
        self.element_index(m).map(|i| self.class_of[i as usize])
    }

    pub fn class_rep(&self, class: usize) -> &Mat {
        &self.elements[self.classes[class].rep as usize]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Exact count of elements commuting with `g`.
    pub fn centralizer_order_of(&self, g: &Mat) -> Int {
        let k = &self.field;
        let count = self
            .elements
            .iter()
            .filter(|h| h.mul(g, k) == g.mul(h, k))
            .count();
        Int::from(count)
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, g: &Mat) -> u64 {
        let k = &self.field;
        let id = Mat::identity(g.n);
        let mut cur = g.clone();
        let mut ord = 1u64;
        while cur != id {
            cur = cur.mul(g, k);
            ord += 1;
        }
        ord
    }
}

/// Is `g` unitary for the identity Gram matrix: `ᵗg^{(q)} · g = 1`.
pub fn gu_member(g: &Mat, q: u64, k: &Field) -> bool {
    let star = g.entrywise_pow(q, k).transpose();
    star.mul(g, k) == Mat::identity(g.n)
}

/// Enumerate the group with the default element guard.
pub fn enumerate_group(spec: &GroupSpec) -> Result<GroupData> {
    enumerate_group_with_guard(spec, DEFAULT_ELEMENT_GUARD)
}

pub fn enumerate_group_with_guard(spec: &GroupSpec, guard: u64) -> Result<GroupData> {
    let order = spec.order();
    if order > Int::from(guard) {
        return Err(Error::GuardExceeded(format!(
            "|{}| = {} exceeds the enumeration guard {}",
            spec, order, guard
        )));
    }
    let fq = spec.base_field_size();
    let (p, f) = split_prime_power(fq)?;
    let field = field_make(p, f)?;
    let candidates = generators(spec, &field);

    // Incremental closure: a candidate already inside the current subgroup is
    // discarded, so the retained generating set stays small and each element
    // is multiplied by each retained generator once.
    let n = spec.n as usize;
    let mut elements: Vec<Mat> = vec![Mat::identity(n)];
    let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
    index.insert(elements[0].data.clone(), 0);
    let mut gens: Vec<Mat> = Vec::new();
    for cand in candidates {
        if index.contains_key(&cand.data) {
            continue;
        }
        gens.push(cand);
        // Extend: existing elements times the new generator seed the frontier.
        let mut frontier: Vec<u32> = Vec::new();
        let new_gen = gens.last().unwrap().clone();
        for i in 0..elements.len() {
            let prod = elements[i].mul(&new_gen, &field);
            if !index.contains_key(&prod.data) {
                let id = elements.len() as u32;
                index.insert(prod.data.clone(), id);
                elements.push(prod);
                frontier.push(id);
            }
        }
        while let Some(i) = frontier.pop() {
            let cur = elements[i as usize].clone();
            for g in &gens {
                let next = cur.mul(g, &field);
                if !index.contains_key(&next.data) {
                    let id = elements.len() as u32;
                    index.insert(next.data.clone(), id);
                    elements.push(next);
                    frontier.push(id);
                }
            }
        }
    }

    if spec.special {
        // Filter the determinant-one subgroup out of the parent closure.
        let expected_parent = spec.general().order();
        if Int::from(elements.len()) != expected_parent {
            return Err(Error::InvalidInput(format!(
                "generator closure for {} gave {} elements, expected {}",
                spec.general(),
                elements.len(),
                expected_parent
            )));
        }
        let filtered: Vec<Mat> = elements
            .into_iter()
            .filter(|m| m.det(&field) == 1)
            .collect();
        let mut index = HashMap::new();
        for (i, m) in filtered.iter().enumerate() {
            index.insert(m.data.clone(), i as u32);
        }
        elements = filtered;
        index_classes(spec, field, elements, index, None)
    } else {
        let gen_ids: Vec<u32> = gens.iter().map(|g| index[&g.data]).collect();
        index_classes(spec, field, elements, index, Some(gen_ids))
    }
}

/// Partition the element set into conjugacy classes.
///
/// With a generating set, classes are conjugation orbits grown by the
/// generators. Without one (special subgroups obtained by filtering), classes
/// are computed by conjugating with every element; this is quadratic and
/// restricted to small groups by an internal guard.
fn index_classes(
    spec: &GroupSpec,
    field: Field,
    elements: Vec<Mat>,
    index: HashMap<Vec<u32>, u32>,
    gen_ids: Option<Vec<u32>>,
) -> Result<GroupData> {
    let order = Int::from(elements.len());
    if spec.order() != order {
        return Err(Error::InvalidInput(format!(
            "enumeration of {} gave {} elements, expected {}",
            spec,
            elements.len(),
            spec.order()
        )));
    }
    if gen_ids.is_none() && elements.len() > 20_000 {
        return Err(Error::GuardExceeded(format!(
            "quadratic class computation refused for |{}| = {}",
            spec,
            elements.len()
        )));
    }

    let m = elements.len();
    let mut class_of = vec![u32::MAX; m];
    let mut classes: Vec<ConjClass> = Vec::new();
    let conjugators: Vec<u32> = match &gen_ids {
        Some(g) => g.clone(),
        None => (0..m as u32).collect(),
    };
    let inv_conj: Vec<Mat> = conjugators
        .iter()
        .map(|&c| elements[c as usize].inverse(&field).expect("group element"))
        .collect();

    for seed in 0..m {
        if class_of[seed] != u32::MAX {
            continue;
        }
        let cid = classes.len() as u32;
        class_of[seed] = cid;
        let mut orbit = vec![seed as u32];
        let mut stack = vec![seed as u32];
        while let Some(x) = stack.pop() {
            let xm = elements[x as usize].clone();
            for (ci, &c) in conjugators.iter().enumerate() {
                let conj = elements[c as usize]
                    .mul(&xm, &field)
                    .mul(&inv_conj[ci], &field);
                let y = index[&conj.data];
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = cid;
                    orbit.push(y);
                    stack.push(y);
                }
            }
        }
        let size = orbit.len() as u64;
        let (cent, rem) = num_integer::Integer::div_rem(&order, &Int::from(size));
        assert!(rem.is_zero(), "class size must divide the group order");
        classes.push(ConjClass {
            rep: seed as u32,
            size,
            centralizer_order: cent,
        });
    }

    // Class equation sanity.
    let total: u64 = classes.iter().map(|c| c.size).sum();
    assert_eq!(Int::from(total), order);

    Ok(GroupData {
        spec: *spec,
        field,
        elements,
        index,
        generators: gen_ids.unwrap_or_default(),
        classes,
        class_of,
    })
}

/// Write `m = p^f` with `p` prime.
pub fn split_prime_power(m: u64) -> Result<(u32, u32)> {
    for p in 2..=m {
        if m % p == 0 {
            let mut f = 0u32;
            let mut rest = m;
            while rest % p == 0 {
                rest /= p;
                f += 1;
            }
            if rest != 1 {
                return Err(Error::InvalidInput(format!("{} is not a prime power", m)));
            }
            return Ok((p as u32, f));
        }
    }
    Err(Error::InvalidInput(format!("{} is not a prime power", m)))
}

/// Generating sets used by the enumerator.
fn generators(spec: &GroupSpec, field: &Field) -> Vec<Mat> {
    let n = spec.n as usize;
    match spec.eps {
        Sign::Plus => {
            let mut gens = Vec::new();
            // Transvections 1 + a·E_{ij} over all a in F_q^x.
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for a in 1..spec.q as u32 {
                        let mut t = Mat::identity(n);
                        t[(i, j)] = a;
                        gens.push(t);
                    }
                }
            }
            // Torus generator for the full determinant range.
            if spec.q > 2 {
                let mut d = Mat::identity(n);
                d[(0, 0)] = field.generator();
                gens.push(d);
            }
            if n == 1 {
                let mut d = Mat::identity(1);
                d[(0, 0)] = field.generator();
                gens = vec![d];
            }
            gens
        }
        Sign::Minus => {
            let q = spec.q;
            let mut gens = Vec::new();
            // Diagonal μ_{q+1} scalar in the first slot.
            let zeta = field.smallest_primitive_root_of_unity(q + 1);
            let mut d = Mat::identity(n);
            d[(0, 0)] = zeta;
            gens.push(d);
            if n >= 2 {
                // Full GU_2(q) in the leading 2x2 block, found by scanning
                // all 2x2 matrices over F_{q^2}.
                let q2 = field.size() as u32;
                for code in 0..q2.pow(4) {
                    let mut c = code;
                    let mut e = [0u32; 4];
                    for t in e.iter_mut() {
                        *t = c % q2;
                        c /= q2;
                    }
                    let g2 = Mat::from_rows(&[&[e[0], e[1]], &[e[2], e[3]]]);
                    if !gu_member(&g2, q, field) {
                        continue;
                    }
                    let mut g = Mat::identity(n);
                    for i in 0..2 {
                        for j in 0..2 {
                            g[(i, j)] = g2[(i, j)];
                        }
                    }
                    gens.push(g);
                }
                // An n-cycle permutation matrix moves the block everywhere.
                if n > 2 {
                    let mut cyc = Mat::zero(n);
                    for i in 0..n {
                        cyc[(i, (i + 1) % n)] = 1;
                    }
                    gens.push(cyc);
                }
                // Rank-one modifications 1 + c·v·(v^(q))ᵀ that happen to be
                // unitary; these supply the transvections that block and
                // monomial matrices miss.
                if n > 2 {
                    let q2 = field.size();
                    let mut v = vec![0u32; n];
                    loop {
                        // next vector in lexicographic order
                        let mut i = 0;
                        while i < n {
                            v[i] += 1;
                            if (v[i] as u64) < q2 {
                                break;
                            }
                            v[i] = 0;
                            i += 1;
                        }
                        if i == n {
                            break;
                        }
                        if v.iter().all(|&x| x == 0) {
                            continue;
                        }
                        let w: Vec<u32> = v.iter().map(|&x| field.pow(x, q)).collect();
                        for c in 1..q2 as u32 {
                            let mut g = Mat::identity(n);
                            for r in 0..n {
                                for s in 0..n {
                                    let add = field.mul(c, field.mul(v[r], w[s]));
                                    g[(r, s)] = field.add(g[(r, s)], add);
                                }
                            }
                            if gu_member(&g, q, field) && g != Mat::identity(n) {
                                gens.push(g);
                            }
                        }
                    }
                }
            }
            gens
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parse_and_order() {
        let g = GroupSpec::parse("GL(2,3)").unwrap();
        assert_eq!(g, GroupSpec::gl(2, 3));
        assert_eq!(g.order(), Int::from(48));
        assert_eq!(GroupSpec::parse("GU(2,2)").unwrap().order(), Int::from(18));
        assert_eq!(GroupSpec::parse("SL(2,3)").unwrap().order(), Int::from(24));
        assert_eq!(GroupSpec::gu(3, 2).order(), Int::from(648));
        assert!(GroupSpec::parse("Sp(4,2)").is_err());
        assert_eq!(format!("{}", GroupSpec::su(3, 2)), "SU(3,2)");
    }

    #[test]
    fn gl22_is_s3() {
        let g = enumerate_group(&GroupSpec::gl(2, 2)).unwrap();
        assert_eq!(g.order(), 6);
        let mut sizes: Vec<u64> = g.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn gl23_class_count() {
        let g = enumerate_group(&GroupSpec::gl(2, 3)).unwrap();
        assert_eq!(g.order(), 48);
        // k(GL_2(q)) = q^2 - 1.
        assert_eq!(g.num_classes(), 8);
        for c in &g.classes {
            assert_eq!(
                Int::from(c.size) * &c.centralizer_order,
                Int::from(48),
                "class equation"
            );
        }
    }

    #[test]
    fn gu22_enumeration() {
        let g = enumerate_group(&GroupSpec::gu(2, 2)).unwrap();
        assert_eq!(g.order(), 18);
        // Brute-force derivation: GU_2(2) is C_3 x S_3 with 9 classes.
        assert_eq!(g.num_classes(), 9);
        for m in &g.elements {
            assert!(gu_member(m, 2, &g.field));
        }
    }

    #[test]
    fn gu32_enumeration() {
        let g = enumerate_group(&GroupSpec::gu(3, 2)).unwrap();
        assert_eq!(g.order(), 648);
        assert_eq!(Int::from(g.order()), GroupSpec::gu(3, 2).order());
    }

    #[test]
    fn sl23_from_filter() {
        let g = enumerate_group(&GroupSpec::sl(2, 3)).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.num_classes(), 7);
    }

    #[test]
    fn guard_refuses_large_groups() {
        assert!(matches!(
            enumerate_group(&GroupSpec::gl(5, 3)),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn centralizer_of_transvection_gl23() {
        let g = enumerate_group(&GroupSpec::gl(2, 3)).unwrap();
        let t = Mat::from_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(g.centralizer_order_of(&t), Int::from(6));
        // Regular semisimple split element has centralizer (q-1)^2.
        let d = Mat::from_rows(&[&[1, 0], &[0, 2]]);
        assert_eq!(g.centralizer_order_of(&d), Int::from(4));
    }
}
