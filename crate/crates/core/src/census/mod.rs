//! Label census: orbit-class counts, full label enumeration, degree and
//! level statistics, and Witten zeta values.

mod counts;
mod enumerate;
mod stats;
mod zeta;

pub use counts::{
    moebius, orbit_class_counts, orbit_tables, orbit_universe_size, OrbitClassCounts,
};
pub use enumerate::{class_number, enumerate_labels, enumerate_labels_guarded};
pub use stats::{
    class_number_bounds_check, degree_multiset, degree_square_sum, degree_true_level_multiset,
    level_statistics, LevelStats,
};
pub use zeta::{power_enclosure, witten_zeta, RealEnclosure};
