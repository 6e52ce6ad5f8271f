//! Pinnacle sets of colored permutation groups `G(m, p, n)`.
//!
//! Values `ξ^a(x)` carry a color `a ∈ Z_m` and a magnitude `x ∈ [n]`. A
//! permutation's pinnacles are the values sitting at its interior peaks with
//! respect to the total order `≺`. This crate decides which sets arise as
//! pinnacle sets, counts them four independent ways, relates different moduli
//! by color shifts, and checks all of it against an exhaustive oracle.

pub mod admissible;
pub mod count;
pub mod embed;
pub mod error;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod pinset;
pub mod reference;
pub mod value;

pub use admissible::{
    canonical_witness, colored_admissible_degree, decide, decide_recursive, decide_top, is_admissible,
    is_admissible_rec, is_admissible_top, ColoredDegree, Rejection, Verdict,
};
pub use count::{
    count_closed_alternating, count_closed_positive, count_complex, count_recursion_m, count_recursion_n, count_total,
    count_with, cross_validate, is_odd_maximal, max_cardinality, odd_reduction_offset, Count, Method,
};
pub use embed::{shift_perm, shift_set, unshift_perm, unshift_set, ShiftParams};
pub use error::{Error, Result};
pub use group::{in_subgroup, GroupParams};
pub use oracle::{
    collect_pinnacle_sets, decide_in_group, enumerate_group, witnesses_of, OracleBudget, OracleReport, WitnessStats,
};
pub use perm::{color_sum, inverse, multiply, peaks, pinnacle_set, GenPerm};
pub use pinset::{color_slice, magnitude_set, PinSet};
pub use value::{Ambient, ColoredValue};
