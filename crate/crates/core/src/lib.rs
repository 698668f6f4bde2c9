//! Exact-arithmetic toolkit for character levels of finite general linear and
//! unitary groups `GL_n(q)`, `GU_n(q)` and their special subgroups.
//!
//! The crate is organised around seven subsystems:
//! - [`qcomb`]: partitions, hooks, Gaussian binomials, Littlewood-Richardson
//!   coefficients and the elementary Hall-polynomial sum;
//! - [`gfcore`]: concrete finite fields, matrices, enumeration of small matrix
//!   groups, Weil character values and Burnside orbit counting;
//! - [`labels`]: character labels (semisimple part as eigenvalue orbits plus
//!   unipotent partitions), degrees, levels, duality and the rank-changing
//!   bijections;
//! - [`census`]: counting-mode enumeration of all labels of a group, degree
//!   multisets, level statistics and Witten zeta values;
//! - [`oracle`]: ground truth on small concrete groups — exact character
//!   tables (Dixon-Schneider), empirical levels, dual-pair decompositions,
//!   commutator measures and random-walk norms;
//! - [`bounds`]: closed-form counting formulas and every explicit inequality
//!   threshold as an executable predicate or calculator;
//! - [`cyc`]: sparse exact cyclotomic arithmetic shared by the above.
//!
//! All computations are exact: big integers, big rationals, integer polynomial
//! arithmetic and cyclotomic numbers with integer coordinates.  Floating point
//! appears only in decimal rendering of interval-bounded reals.

pub mod bounds;
pub mod cache;
pub mod census;
pub mod cyc;
pub mod error;
pub mod gfcore;
pub mod labels;
pub mod oracle;
pub mod qcomb;
pub mod rng;

pub use error::Error;

/// Arbitrary-precision signed integer used for all degrees, orders and counts.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational used for all exact comparisons.
pub type Rat = num_rational::BigRational;

pub use census::{degree_multiset, enumerate_labels, level_statistics, orbit_class_counts};
pub use gfcore::{Field, GroupData, GroupSpec, Sign};
pub use labels::{CharLabel, EigenOrbit, OrbitKind};
pub use oracle::CharTable;

pub use qcomb::{Partition, QPoly};
