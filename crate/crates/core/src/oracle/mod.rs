//! Ground truth on small concrete groups.
//!
//! The Dixon-Schneider engine produces exact character tables (validated by
//! both orthogonality relations before release); on top of it sit the Weil
//! power filtration (empirical levels), the unitary parity check, dual-pair
//! decompositions, commutator measures, exact class random walks, and the
//! restriction analysis to the determinant-one subgroups.

mod dixon;
mod dualpair;
mod levels;
mod modular;
mod restrict;
mod walk;

pub use dixon::{dixon_table, CharRow, CharTable};
pub use dualpair::{dual_pair_decompose, DualPairDecomposition};
pub use levels::{
    det_type_linear_rows, empirical_level, empirical_true_level, inner_with_trivial, parity_check,
    tau_power_decompose, tau_self_duality_check, weil_class_values,
};
pub use restrict::{restriction_check_sl, RestrictionReport};
pub use walk::{mu_commutator, random_walk, WalkReport};
