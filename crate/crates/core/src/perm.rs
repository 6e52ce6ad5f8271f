//! Generalized permutations, elements of `Z_m ≀ S_n`.
//!
//! An element is determined by where it sends the uncolored values `1..=n`;
//! everything else follows from color-equivariance `w(ξ^i x) = ξ^i w(x)`.
//! Storage is positional (`image[j - 1] = w(j)`), while the one-line
//! notation used for display and parsing lists `w(n) … w(1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::pinset::PinSet;
use crate::value::{Ambient, ColoredValue};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenPerm {
    ambient: Ambient,
    image: Vec<ColoredValue>,
}

impl GenPerm {
    /// Builds a permutation from its positional image `[w(1), …, w(n)]`.
    pub fn new(modulus: u32, image: Vec<ColoredValue>) -> Result<Self> {
        let degree = u32::try_from(image.len()).map_err(|_| Error::ZeroDegree)?;
        let ambient = Ambient::new(modulus, degree)?;
        let mut seen = vec![false; image.len()];
        for &v in &image {
            ambient.check(v)?;
            let slot = &mut seen[v.magnitude() as usize - 1];
            if *slot {
                return Err(Error::NotAPermutation { degree });
            }
            *slot = true;
        }
        Ok(Self { ambient, image })
    }

    /// Builds a permutation from `(color, magnitude)` pairs listed in one-line
    /// order `w(n) … w(1)`.
    pub fn from_one_line(modulus: u32, word: &[(u32, u32)]) -> Result<Self> {
        let image = word.iter().rev().map(|&(a, x)| ColoredValue::new(a, x)).collect();
        Self::new(modulus, image)
    }

    pub(crate) fn from_parts_unchecked(ambient: Ambient, image: Vec<ColoredValue>) -> Self {
        debug_assert_eq!(image.len(), ambient.degree() as usize);
        Self { ambient, image }
    }

    pub fn identity(modulus: u32, degree: u32) -> Result<Self> {
        let ambient = Ambient::new(modulus, degree)?;
        let image = (1..=degree).map(|j| ColoredValue::new(0, j)).collect();
        Ok(Self { ambient, image })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn modulus(&self) -> u32 {
        self.ambient.modulus()
    }

    pub fn degree(&self) -> u32 {
        self.ambient.degree()
    }

    /// `w(j)` for a position `1 ≤ j ≤ n`.
    pub fn at(&self, position: usize) -> ColoredValue {
        self.image[position - 1]
    }

    /// Positional image `[w(1), …, w(n)]`.
    pub fn image(&self) -> &[ColoredValue] {
        &self.image
    }

    /// Values in one-line order `w(n), …, w(1)`.
    pub fn one_line(&self) -> impl Iterator<Item = ColoredValue> + '_ {
        self.image.iter().rev().copied()
    }

    /// Action on an arbitrary colored value: `w(ξ^a x) = ξ^a w(x)`.
    pub fn apply(&self, v: ColoredValue) -> ColoredValue {
        let target = self.image[v.magnitude() as usize - 1];
        target.with_color((target.color() + v.color()) % self.modulus())
    }

    /// The product `self · other`, acting as `self ∘ other` (apply `other` first).
    ///
    /// In coordinates, if `other(j) = ξ^{b_j}(y_j)` and `self(y) = ξ^{a_y}(σ(y))`,
    /// the product sends `j ↦ ξ^{b_j + a_{y_j}}(σ(y_j))`.
    pub fn multiply(&self, other: &GenPerm) -> Result<GenPerm> {
        self.ambient.ensure_same(other.ambient)?;
        let image = other.image.iter().map(|&v| self.apply(v)).collect();
        Ok(Self::from_parts_unchecked(self.ambient, image))
    }

    pub fn inverse(&self) -> GenPerm {
        let m = self.modulus();
        let mut image = vec![ColoredValue::new(0, 0); self.image.len()];
        for (j, v) in self.image.iter().enumerate() {
            let back = (m - v.color()) % m;
            image[v.magnitude() as usize - 1] = ColoredValue::new(back, j as u32 + 1);
        }
        Self::from_parts_unchecked(self.ambient, image)
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(j, v)| v.color() == 0 && v.magnitude() as usize == j + 1)
    }

    /// Interior positions `i` with `w(i-1) ≺ w(i) ≻ w(i+1)`, ascending.
    pub fn peaks(&self) -> Vec<usize> {
        self.image
            .windows(3)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1] && w[1] > w[2])
            .map(|(i, _)| i + 2)
            .collect()
    }

    pub fn pinnacle_set(&self) -> PinSet {
        let elements = self.peaks().into_iter().map(|i| self.at(i)).collect();
        PinSet::from_sorted_unchecked(self.ambient, sorted(elements))
    }

    /// `ε_w`, the sum of all color exponents.
    pub fn color_sum(&self) -> u64 {
        self.image.iter().map(|v| u64::from(v.color())).sum()
    }
}

fn sorted(mut v: Vec<ColoredValue>) -> Vec<ColoredValue> {
    v.sort_unstable();
    v
}

pub fn multiply(w: &GenPerm, u: &GenPerm) -> Result<GenPerm> {
    w.multiply(u)
}

pub fn inverse(w: &GenPerm) -> GenPerm {
    w.inverse()
}

pub fn peaks(w: &GenPerm) -> Vec<usize> {
    w.peaks()
}

pub fn pinnacle_set(w: &GenPerm) -> PinSet {
    w.pinnacle_set()
}

pub fn color_sum(w: &GenPerm) -> u64 {
    w.color_sum()
}

/// One-line notation `xi^a(x) xi^b(y) …`, from position `n` down to 1.
impl fmt::Display for GenPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.one_line().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
