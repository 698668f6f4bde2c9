//! Concrete finite fields, matrices and small matrix groups.
//!
//! This is the "explicit" side of the crate: everything here works with
//! actual field elements and matrices, enumerates group elements up to a
//! guard, and feeds the character-table oracle. The unitary groups fix the
//! identity Gram matrix, so membership is the one-line check
//! `ᵗg^{(q)} g = 1`.

mod field;
mod group;
mod matrix;
mod orbits;
mod weil;

pub use field::{factorize_u64, field_make, is_prime_u64, Field};
pub use group::{
    enumerate_group, enumerate_group_with_guard, gu_member, split_prime_power, ConjClass,
    GroupData, GroupSpec, Sign, DEFAULT_ELEMENT_GUARD,
};
pub use matrix::{factor_poly, poly_at_matrix, Mat};
pub use orbits::{pencil_orbit_oracle, tuple_orbit_count, tuple_orbit_count_oracle};
pub use weil::{
    center_order, delta_max_eigenspace, is_central, kron_fixed_dim, weil_component_value,
    weil_total_degree, weil_value, weil_value_from_dim,
};
