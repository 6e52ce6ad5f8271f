//! Deciding whether a set is the pinnacle set of some group element.
//!
//! Three deciders are provided and must agree everywhere:
//!
//! * [`decide`] builds the canonical witness `ω_P` and checks `Pin(ω_P) = P`.
//!   Whenever `P` is admissible `ω_P` is a witness, so this is a complete
//!   linear-time test and the one used in production paths.
//! * [`decide_recursive`] peels off the color-0 slice, relabels what is left
//!   into a smaller degree, shifts colors down by one and recurses on `m`.
//! * [`decide_top`] checks only the top color slice `π_{m-1}(P)` as a set in
//!   the symmetric group on the magnitudes not used by other colors.
//!
//! Structural failures (a repeated magnitude, too many elements) are reported
//! as an [`Inadmissible`](Verdict::Inadmissible) verdict with a reason rather
//! than as errors.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::GenPerm;
use crate::pinset::PinSet;
use crate::value::{Ambient, ColoredValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rejection {
    RepeatedMagnitude(u32),
    TooManyPinnacles {
        size: usize,
        max: usize,
    },
    /// Structurally fine, but no group element realizes the set.
    NoWitness,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::RepeatedMagnitude(x) => write!(f, "repeated magnitude {x}"),
            Rejection::TooManyPinnacles { size, max } => {
                write!(f, "{size} elements exceed the maximum of {max} pinnacles")
            }
            Rejection::NoWitness => f.write_str("no witness exists"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Admissible,
    Inadmissible(Rejection),
}

impl Verdict {
    pub fn is_admissible(self) -> bool {
        matches!(self, Verdict::Admissible)
    }

    pub fn rejection(self) -> Option<Rejection> {
        match self {
            Verdict::Admissible => None,
            Verdict::Inadmissible(r) => Some(r),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Admissible => f.write_str("admissible"),
            Verdict::Inadmissible(r) => write!(f, "inadmissible: {r}"),
        }
    }
}

fn structural(p: &PinSet) -> Option<Rejection> {
    if let Some(x) = p.repeated_magnitude() {
        return Some(Rejection::RepeatedMagnitude(x));
    }
    let max = p.ambient().max_pinnacles() as usize;
    (p.len() > max).then_some(Rejection::TooManyPinnacles { size: p.len(), max })
}

/// The canonical witness `ω_P`.
///
/// In one-line order it reads
/// `ξ^{m-1}(v_1) P_1 ξ^{m-1}(v_2) P_2 … ξ^{m-1}(v_d) P_d ξ^{m-1}(v_{d+1}) … ξ^{m-1}(v_{n-d})`
/// where `P_1 ≺ … ≺ P_d` are the elements of `P` and `v_1 > v_2 > …` are the
/// magnitudes not in `|P|`. Both subsequences are `≺`-increasing.
pub fn canonical_witness(p: &PinSet) -> Result<GenPerm> {
    match structural(p) {
        Some(Rejection::RepeatedMagnitude(magnitude)) => return Err(Error::MultiplicityViolation { magnitude }),
        Some(Rejection::TooManyPinnacles { size, max }) => {
            return Err(Error::CardinalityViolation {
                size,
                max,
                degree: p.degree(),
            })
        }
        _ => {}
    }
    let top = p.modulus() - 1;
    let used = p.magnitude_set();
    let mut rest = (1..=p.degree())
        .rev()
        .filter(|x| !used.contains(x))
        .map(|x| ColoredValue::new(top, x));

    let mut one_line = Vec::with_capacity(p.degree() as usize);
    for &pin in p.elements() {
        one_line.extend(rest.next());
        one_line.push(pin);
    }
    one_line.extend(rest);
    one_line.reverse();
    Ok(GenPerm::from_parts_unchecked(p.ambient(), one_line))
}

/// Decider A: canonical-witness test.
pub fn decide(p: &PinSet) -> Verdict {
    if let Some(r) = structural(p) {
        return Verdict::Inadmissible(r);
    }
    let w = canonical_witness(p).expect("structural checks passed");
    if w.pinnacle_set() == *p {
        Verdict::Admissible
    } else {
        Verdict::Inadmissible(Rejection::NoWitness)
    }
}

/// Decider B: recursion on the modulus through the color-0 slice.
pub fn decide_recursive(p: &PinSet) -> Verdict {
    if let Some(r) = structural(p) {
        return Verdict::Inadmissible(r);
    }
    let m = p.modulus();
    if m == 1 {
        return decide(p);
    }
    let zero: BTreeSet<u32> = p
        .elements()
        .iter()
        .filter(|v| v.color() == 0)
        .map(|v| v.magnitude())
        .collect();
    let sub_ambient = Ambient::new(m - 1, p.degree() - zero.len() as u32).expect("fewer than n pinnacles");
    let shifted = p
        .elements()
        .iter()
        .filter(|v| v.color() != 0)
        .map(|&v| relabel(v, &zero).with_color(v.color() - 1));
    let sub = PinSet::in_ambient(sub_ambient, shifted).expect("relabeling preserves validity");
    match decide_recursive(&sub) {
        Verdict::Admissible => Verdict::Admissible,
        Verdict::Inadmissible(_) => Verdict::Inadmissible(Rejection::NoWitness),
    }
}

/// Decider C: the top color slice, viewed in a symmetric group.
pub fn decide_top(p: &PinSet) -> Verdict {
    if let Some(r) = structural(p) {
        return Verdict::Inadmissible(r);
    }
    let top = p.modulus() - 1;
    let others: BTreeSet<u32> = p
        .elements()
        .iter()
        .filter(|v| v.color() != top)
        .map(|v| v.magnitude())
        .collect();
    let sub_ambient = Ambient::new(1, p.degree() - others.len() as u32).expect("fewer than n pinnacles");
    let lowered = p
        .elements()
        .iter()
        .filter(|v| v.color() == top)
        .map(|&v| relabel(v, &others).with_color(0));
    let sub = PinSet::in_ambient(sub_ambient, lowered).expect("relabeling preserves validity");
    match decide(&sub) {
        Verdict::Admissible => Verdict::Admissible,
        Verdict::Inadmissible(_) => Verdict::Inadmissible(Rejection::NoWitness),
    }
}

/// Order-preserving relabel of a magnitude into `[n] \ removed ≅ [n - #removed]`.
fn relabel(v: ColoredValue, removed: &BTreeSet<u32>) -> ColoredValue {
    let below = removed.range(..v.magnitude()).count() as u32;
    v.with_magnitude(v.magnitude() - below)
}

pub fn is_admissible(p: &PinSet) -> bool {
    decide(p).is_admissible()
}

pub fn is_admissible_rec(p: &PinSet) -> bool {
    decide_recursive(p).is_admissible()
}

pub fn is_admissible_top(p: &PinSet) -> bool {
    decide_top(p).is_admissible()
}

/// A degree in which a single-colored set becomes admissible, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDegree {
    pub degree: u32,
    /// The input set re-read in `I_degree^m`.
    pub set: PinSet,
    pub witness: GenPerm,
}

/// For a nonempty single-colored set, `N = 2ℓ + 1` with `ℓ` the largest
/// magnitude; the canonical witness in `Z_m ≀ S_N` then realizes the set.
pub fn colored_admissible_degree(p: &PinSet) -> Result<ColoredDegree> {
    if p.is_empty() || p.colors().len() != 1 {
        return Err(Error::NotColored);
    }
    let largest = p.magnitude_set().into_iter().max().expect("nonempty");
    let degree = 2 * largest + 1;
    let set = PinSet::new(p.modulus(), degree, p.elements().iter().copied())?;
    let witness = canonical_witness(&set)?;
    Ok(ColoredDegree { degree, set, witness })
}
