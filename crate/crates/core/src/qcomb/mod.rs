//! Partitions and q-combinatorics.
//!
//! Everything here is a pure function of its inputs over exact integers:
//! partition statistics and iteration, Gaussian binomials as integer
//! polynomials, the bivariate expansion of `t^m` into q-binomials,
//! Littlewood-Richardson coefficients by tableau enumeration, and the
//! elementary Hall-polynomial sum with its brute-force subgroup oracle.

mod gaussian;
mod littlewood;
mod partition;
mod qpoly;

pub use gaussian::{
    abelian_subgroup_oracle, gauss_binom, gauss_binom_eval, hall_elementary_sum,
    subgroup_count_by_point_sets, z_identity_check,
};
pub use littlewood::{interlaces, lr_coefficient, young_row_rule};
pub use partition::{
    partition_counts, partitions_of, sum1_classify, BracketFamily, Partition, PartitionIter,
    PartitionStats,
};
pub use qpoly::QPoly;
