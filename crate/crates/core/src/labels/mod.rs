//! Character labels for `GL^ε_n(q)` and the label-level algorithms.
//!
//! An irreducible character is labelled by a finite map from eigenvalue-orbit
//! classes to partitions: orbit classes of degree 1 inside `μ_{q−ε}` are
//! "unit" classes carrying a residue `c mod (q−ε)`, all other classes of
//! degree `d` are "generic" and carry a canonical index. The sum of
//! `d·|λ|` over the entries is the rank `n`, and no entry maps to the empty
//! partition.
//!
//! Degrees, levels, linear twists, duality, and the rank-changing bijections
//! all operate on this data without ever constructing a character table.

mod degree;
mod level;

pub use degree::{
    centralizer_factor, degree, degree_poly, index_pprime, unipotent_degree, unipotent_degree_poly,
};
pub use level::{
    alvis_curtis_dual, level, slu_level, theta_forward, theta_inverse, true_level, twist_by_linear,
    ScalingTables,
};

use crate::error::{Error, Result};
use crate::gfcore::{GroupSpec, Sign};
use crate::qcomb::Partition;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Kind of an eigenvalue-orbit class: a unit class (degree 1, inside
/// `μ_{q−ε}`) or a generic class identified by a canonical index among the
/// degree-`d` classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OrbitKind {
    Unit { c: u32 },
    Generic { index: u32 },
}

/// An eigenvalue-orbit class of degree `d`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EigenOrbit {
    pub d: u32,
    pub kind: OrbitKind,
}

impl EigenOrbit {
    pub fn unit(c: u32) -> EigenOrbit {
        EigenOrbit {
            d: 1,
            kind: OrbitKind::Unit { c },
        }
    }

    pub fn generic(d: u32, index: u32) -> EigenOrbit {
        EigenOrbit {
            d,
            kind: OrbitKind::Generic { index },
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.kind, OrbitKind::Unit { .. })
    }
}

/// Character label: spec plus the orbit-to-partition map.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharLabel {
    spec: GroupSpec,
    entries: BTreeMap<EigenOrbit, Partition>,
}

impl CharLabel {
    /// Validated constructor: the spec must be non-special, unit orbits must
    /// have degree 1 with residue below `q−ε`, no partition may be empty, and
    /// the total weight `Σ d·|λ|` must equal `n`.
    pub fn new(spec: GroupSpec, entries: BTreeMap<EigenOrbit, Partition>) -> Result<CharLabel> {
        if spec.special {
            return Err(Error::InvalidInput(
                "labels are attached to the general groups only".into(),
            ));
        }
        let center = (spec.q as i64 - spec.eps.as_i64()) as u64;
        let mut weight = 0u64;
        for (orbit, lam) in &entries {
            if lam.is_empty() {
                return Err(Error::InvalidInput("empty partition in label entry".into()));
            }
            match orbit.kind {
                OrbitKind::Unit { c } => {
                    if orbit.d != 1 {
                        return Err(Error::InvalidInput("unit orbit must have degree 1".into()));
                    }
                    if (c as u64) >= center {
                        return Err(Error::InvalidInput(format!(
                            "unit residue {} out of range mod {}",
                            c, center
                        )));
                    }
                }
                OrbitKind::Generic { .. } => {
                    if orbit.d <= 1 {
                        return Err(Error::InvalidInput(
                            "degree-1 orbits are unit classes, not generic".into(),
                        ));
                    }
                }
            }
            weight += orbit.d as u64 * lam.size();
        }
        if weight != spec.n as u64 {
            return Err(Error::InvalidInput(format!(
                "label weight {} does not match rank {}",
                weight, spec.n
            )));
        }
        Ok(CharLabel { spec, entries })
    }

    /// The trivial character: the full partition `(n)` at the unit class of 1.
    pub fn trivial(spec: GroupSpec) -> CharLabel {
        let mut entries = BTreeMap::new();
        if spec.n > 0 {
            entries.insert(EigenOrbit::unit(0), Partition::row(spec.n));
        }
        CharLabel::new(spec, entries).expect("trivial label is valid")
    }

    /// The Steinberg character: `(1^n)` at the unit class of 1.
    pub fn steinberg(spec: GroupSpec) -> CharLabel {
        let mut entries = BTreeMap::new();
        entries.insert(EigenOrbit::unit(0), Partition::column(spec.n));
        CharLabel::new(spec, entries).expect("steinberg label is valid")
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn entries(&self) -> &BTreeMap<EigenOrbit, Partition> {
        &self.entries
    }

    /// Partition at the unit class of 1, if present.
    pub fn unit_one_partition(&self) -> Option<&Partition> {
        self.entries.get(&EigenOrbit::unit(0))
    }

    /// All parts of all entry partitions, each part repeated `d` times,
    /// sorted decreasingly. The q-degree of the label's degree polynomial is
    /// `b` of this combined partition.
    pub fn combined_partition(&self) -> Partition {
        let mut parts: Vec<u32> = Vec::new();
        for (orbit, lam) in &self.entries {
            for &p in lam.parts() {
                for _ in 0..orbit.d {
                    parts.push(p);
                }
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive parts")
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<EntryJson> = self
            .entries
            .iter()
            .map(|(orbit, lam)| EntryJson {
                d: orbit.d,
                kind: match orbit.kind {
                    OrbitKind::Unit { .. } => "unit".into(),
                    OrbitKind::Generic { .. } => "generic".into(),
                },
                c: match orbit.kind {
                    OrbitKind::Unit { c } => Some(c),
                    _ => None,
                },
                index: match orbit.kind {
                    OrbitKind::Generic { index } => Some(index),
                    _ => None,
                },
                lambda: lam.parts().to_vec(),
            })
            .collect();
        let doc = LabelJson {
            spec: SpecJson {
                eps: self.spec.eps.to_string(),
                n: self.spec.n,
                q: self.spec.q,
            },
            entries,
        };
        serde_json::to_string(&doc).expect("label serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<CharLabel> {
        let doc: LabelJson = serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("bad label JSON: {}", e)))?;
        let eps = match doc.spec.eps.as_str() {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => {
                return Err(Error::InvalidInput(format!("bad eps: {}", other)));
            }
        };
        let spec = GroupSpec {
            eps,
            n: doc.spec.n,
            q: doc.spec.q,
            special: false,
        };
        let mut entries = BTreeMap::new();
        for e in doc.entries {
            let kind = match e.kind.as_str() {
                "unit" => OrbitKind::Unit {
                    c: e.c
                        .ok_or_else(|| Error::InvalidInput("unit entry missing c".into()))?,
                },
                "generic" => OrbitKind::Generic {
                    index: e
                        .index
                        .ok_or_else(|| Error::InvalidInput("generic entry missing index".into()))?,
                },
                other => {
                    return Err(Error::InvalidInput(format!("bad entry kind: {}", other)));
                }
            };
            let orbit = EigenOrbit { d: e.d, kind };
            let lam = Partition::new(e.lambda)?;
            if entries.insert(orbit, lam).is_some() {
                return Err(Error::InvalidInput("duplicate orbit in label".into()));
            }
        }
        CharLabel::new(spec, entries)
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.spec)?;
        for (i, (orbit, lam)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match orbit.kind {
                OrbitKind::Unit { c } => write!(f, "u{}:{}", c, lam)?,
                OrbitKind::Generic { index } => write!(f, "g{}.{}:{}", orbit.d, index, lam)?,
            }
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct LabelJson {
    spec: SpecJson,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    eps: String,
    n: u32,
    q: u64,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    d: u32,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<u32>,
    lambda: Vec<u32>,
}
