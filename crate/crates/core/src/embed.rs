//! Color-shift embeddings `Ψ_k` (sets) and `ψ_k` (permutations) from modulus
//! `m` into modulus `m + k`, sending `ξ^a(x)` to `ζ^{a+k}(x)`.
//!
//! `ψ_k` is a plain entrywise map. It is injective and carries witnesses to
//! witnesses, but it is not a group homomorphism.

use crate::error::Result;
use crate::perm::GenPerm;
use crate::pinset::PinSet;
use crate::value::{Ambient, ColoredValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftParams {
    source: Ambient,
    shift: u32,
}

impl ShiftParams {
    pub fn new(source_modulus: u32, shift: u32, degree: u32) -> Result<Self> {
        Ok(Self {
            source: Ambient::new(source_modulus, degree)?,
            shift,
        })
    }

    pub fn source(self) -> Ambient {
        self.source
    }

    pub fn target(self) -> Ambient {
        Ambient::new(self.source.modulus() + self.shift, self.source.degree()).expect("source is valid")
    }

    pub fn shift(self) -> u32 {
        self.shift
    }

    fn up(self, v: ColoredValue) -> ColoredValue {
        v.with_color(v.color() + self.shift)
    }

    fn down(self, v: ColoredValue) -> Option<ColoredValue> {
        v.color().checked_sub(self.shift).map(|c| v.with_color(c))
    }
}

/// `Ψ_k(P)`.
pub fn shift_set(p: &PinSet, s: ShiftParams) -> Result<PinSet> {
    s.source.ensure_same(p.ambient())?;
    // a uniform color shift preserves the order
    Ok(PinSet::from_sorted_unchecked(
        s.target(),
        p.elements().iter().map(|&v| s.up(v)).collect(),
    ))
}

/// `ψ_k(w)`.
pub fn shift_perm(w: &GenPerm, s: ShiftParams) -> Result<GenPerm> {
    s.source.ensure_same(w.ambient())?;
    Ok(GenPerm::from_parts_unchecked(
        s.target(),
        w.image().iter().map(|&v| s.up(v)).collect(),
    ))
}

/// Preimage under `ψ_k`; `None` unless `w` lives in modulus `m + k` and every
/// color is at least `k`.
pub fn unshift_perm(w: &GenPerm, s: ShiftParams) -> Option<GenPerm> {
    if w.ambient() != s.target() {
        return None;
    }
    let image = w.image().iter().map(|&v| s.down(v)).collect::<Option<Vec<_>>>()?;
    Some(GenPerm::from_parts_unchecked(s.source, image))
}

/// Preimage under `Ψ_k`; `None` unless every color is at least `k`.
pub fn unshift_set(p: &PinSet, s: ShiftParams) -> Option<PinSet> {
    if p.ambient() != s.target() {
        return None;
    }
    let elements = p.elements().iter().map(|&v| s.down(v)).collect::<Option<Vec<_>>>()?;
    Some(PinSet::from_sorted_unchecked(s.source, elements))
}
