//! Colored values `ξ^a(x)` and the total order on them.
//!
//! A colored value is stored as its color exponent `a` and magnitude `x`;
//! the root of unity `ξ` is purely symbolic. The order runs
//!
//! ```text
//! ξ^{m-1}(n) ≺ … ≺ ξ^{m-1}(1) ≺ ξ^{m-2}(n) ≺ … ≺ ξ^1(1) ≺ n ≺ … ≺ 2 ≺ 1
//! ```
//!
//! so a higher color is smaller and, within a color, a larger magnitude is
//! smaller. Because this comparison never looks at `m` or `n`, [`Ord`] is
//! implemented directly on [`ColoredValue`]; [`Ambient::compare`] adds the
//! range checks for callers that want them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColoredValue {
    color: u32,
    magnitude: u32,
}

impl ColoredValue {
    /// Unchecked constructor; range validation happens against an [`Ambient`].
    pub const fn new(color: u32, magnitude: u32) -> Self {
        Self { color, magnitude }
    }

    pub const fn color(self) -> u32 {
        self.color
    }

    pub const fn magnitude(self) -> u32 {
        self.magnitude
    }

    pub const fn with_color(self, color: u32) -> Self {
        Self { color, ..self }
    }

    pub const fn with_magnitude(self, magnitude: u32) -> Self {
        Self { magnitude, ..self }
    }
}

impl Ord for ColoredValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (other.color, other.magnitude).cmp(&(self.color, self.magnitude))
    }
}

impl PartialOrd for ColoredValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `xi^a(x)`.
impl fmt::Display for ColoredValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi^{}({})", self.color, self.magnitude)
    }
}

/// The ambient set `I_n^m` of colored values with `m` colors and magnitudes `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ambient {
    modulus: u32,
    degree: u32,
}

impl Ambient {
    pub fn new(modulus: u32, degree: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Self { modulus, degree })
    }

    pub const fn modulus(self) -> u32 {
        self.modulus
    }

    pub const fn degree(self) -> u32 {
        self.degree
    }

    /// Largest possible pinnacle-set cardinality, `⌊(n-1)/2⌋`.
    pub const fn max_pinnacles(self) -> u32 {
        (self.degree - 1) / 2
    }

    pub fn contains(self, v: ColoredValue) -> bool {
        v.color < self.modulus && (1..=self.degree).contains(&v.magnitude)
    }

    pub fn check(self, v: ColoredValue) -> Result<ColoredValue> {
        if v.color >= self.modulus {
            return Err(Error::ColorOutOfRange {
                color: v.color,
                modulus: self.modulus,
            });
        }
        if !(1..=self.degree).contains(&v.magnitude) {
            return Err(Error::MagnitudeOutOfRange {
                magnitude: v.magnitude,
                degree: self.degree,
            });
        }
        Ok(v)
    }

    pub fn value(self, color: u32, magnitude: u32) -> Result<ColoredValue> {
        self.check(ColoredValue::new(color, magnitude))
    }

    /// Compares two values of this ambient set; `Less` means `u ≺ v`.
    pub fn compare(self, u: ColoredValue, v: ColoredValue) -> Result<Ordering> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.cmp(&v))
    }

    /// Every element of `I_n^m`, listed in increasing `≺` order.
    pub fn elements(self) -> impl Iterator<Item = ColoredValue> {
        let n = self.degree;
        (0..self.modulus)
            .rev()
            .flat_map(move |a| (1..=n).rev().map(move |x| ColoredValue::new(a, x)))
    }

    pub(crate) fn ensure_same(self, other: Ambient) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left_m: self.modulus,
                left_n: self.degree,
                right_m: other.modulus,
                right_n: other.degree,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(a: u32, x: u32) -> ColoredValue {
        ColoredValue::new(a, x)
    }

    #[test]
    fn higher_color_is_smaller() {
        let amb = Ambient::new(3, 10).unwrap();
        assert_eq!(amb.compare(cv(2, 10), cv(1, 3)).unwrap(), Ordering::Less);
    }

    #[test]
    fn larger_magnitude_is_smaller_within_color() {
        let amb = Ambient::new(1, 3).unwrap();
        assert_eq!(amb.compare(cv(0, 3), cv(0, 2)).unwrap(), Ordering::Less);
        assert_eq!(amb.compare(cv(0, 2), cv(0, 3)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn reflexive_equal() {
        let amb = Ambient::new(2, 4).unwrap();
        assert_eq!(amb.compare(cv(1, 4), cv(1, 4)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn compare_rejects_out_of_ambient() {
        let amb = Ambient::new(2, 4).unwrap();
        assert!(matches!(
            amb.compare(cv(2, 1), cv(0, 1)),
            Err(Error::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            amb.compare(cv(0, 1), cv(0, 5)),
            Err(Error::MagnitudeOutOfRange { .. })
        ));
        assert!(matches!(
            amb.compare(cv(0, 0), cv(0, 1)),
            Err(Error::MagnitudeOutOfRange { .. })
        ));
    }

    #[test]
    fn elements_are_sorted() {
        let amb = Ambient::new(3, 4).unwrap();
        let all: Vec<_> = amb.elements().collect();
        assert_eq!(all.len(), 12);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], cv(2, 4));
        assert_eq!(all[11], cv(0, 1));
    }

    #[test]
    fn zero_parameters_rejected() {
        assert_eq!(Ambient::new(0, 3), Err(Error::ZeroModulus));
        assert_eq!(Ambient::new(3, 0), Err(Error::ZeroDegree));
    }
}
