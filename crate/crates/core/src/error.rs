use num_bigint::BigUint;
use thiserror::Error;

use crate::count::Method;
use crate::group::GroupParams;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("p = {p} does not divide m = {m}")]
    NonDividingP { m: u32, p: u32 },

    #[error("color {color} out of range for modulus {modulus}")]
    ColorOutOfRange { color: u32, modulus: u32 },

    #[error("magnitude {magnitude} out of range 1..={degree}")]
    MagnitudeOutOfRange { magnitude: u32, degree: u32 },

    #[error("ambient mismatch: (m={left_m}, n={left_n}) vs (m={right_m}, n={right_n})")]
    AmbientMismatch {
        left_m: u32,
        left_n: u32,
        right_m: u32,
        right_n: u32,
    },

    #[error("magnitudes do not form a permutation of 1..={degree}")]
    NotAPermutation { degree: u32 },

    #[error("duplicate element {color}:{magnitude}")]
    DuplicateElement { color: u32, magnitude: u32 },

    #[error("repeated magnitude {magnitude}")]
    MultiplicityViolation { magnitude: u32 },

    #[error("{size} pinnacles exceed the maximum {max} for degree {degree}")]
    CardinalityViolation { size: usize, max: usize, degree: u32 },

    #[error("d = {d} out of range 0..={max} for n = {n}")]
    CardinalityOutOfRange { n: u32, d: u32, max: u32 },

    #[error("set must be nonempty and single-colored")]
    NotColored,

    #[error("counting methods disagree for (m={m}, n={n}, d={d}): {}", format_values(.values))]
    CountMismatch {
        m: u32,
        n: u32,
        d: u32,
        values: Vec<(Method, BigUint)>,
    },

    #[error("oracle budget exceeded for G({}, {}, {}): needs {required} elements, budget is {budget}", .params.m(), .params.p(), .params.n())]
    BudgetExceeded {
        params: GroupParams,
        required: BigUint,
        budget: u64,
    },
}

fn format_values(values: &[(Method, BigUint)]) -> String {
    values
        .iter()
        .map(|(method, v)| format!("{method}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}
