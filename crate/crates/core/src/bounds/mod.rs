//! Closed-form counting formulas and explicit inequality thresholds as
//! executable predicates and calculators.

mod mixing;
mod orbits;
mod pencil;
mod suites;
mod thresholds;

pub use mixing::{mixing_bound, mixing_exponent, WalkNorm};
pub use orbits::{gu_power_inner, orbit_bounds_check, orbit_formula, orbit_lower_check};
pub use pencil::{pencil_big_f, pencil_big_h, pencil_bounds_check, pencil_f, pencil_h};
pub use suites::{inequality_suite, known_suites, SuiteReport};
pub use thresholds::ThresholdCalc;
