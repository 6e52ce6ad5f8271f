use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::value::{Ambient, ColoredValue};

/// A set of colored values in `I_n^m`, held in increasing `≺` order.
///
/// Nothing about admissibility is implied; see [`crate::admissible`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PinSet {
    ambient: Ambient,
    elements: Vec<ColoredValue>,
}

impl PinSet {
    pub fn new(modulus: u32, degree: u32, values: impl IntoIterator<Item = ColoredValue>) -> Result<Self> {
        Self::in_ambient(Ambient::new(modulus, degree)?, values)
    }

    pub fn in_ambient(ambient: Ambient, values: impl IntoIterator<Item = ColoredValue>) -> Result<Self> {
        let mut elements = values
            .into_iter()
            .map(|v| ambient.check(v))
            .collect::<Result<Vec<_>>>()?;
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement {
                color: w[0].color(),
                magnitude: w[0].magnitude(),
            });
        }
        Ok(Self { ambient, elements })
    }

    /// Convenience constructor from `(color, magnitude)` pairs.
    pub fn from_pairs(modulus: u32, degree: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(modulus, degree, pairs.iter().map(|&(a, x)| ColoredValue::new(a, x)))
    }

    pub fn empty(modulus: u32, degree: u32) -> Result<Self> {
        Ok(Self {
            ambient: Ambient::new(modulus, degree)?,
            elements: Vec::new(),
        })
    }

    pub(crate) fn from_sorted_unchecked(ambient: Ambient, elements: Vec<ColoredValue>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { ambient, elements }
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

    pub fn elements(&self) -> &[ColoredValue] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: ColoredValue) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    /// `|P|`, the set of magnitudes.
    pub fn magnitude_set(&self) -> BTreeSet<u32> {
        self.elements.iter().map(|v| v.magnitude()).collect()
    }

    /// First magnitude that occurs twice, if any.
    pub fn repeated_magnitude(&self) -> Option<u32> {
        let mut seen = BTreeSet::new();
        self.elements.iter().map(|v| v.magnitude()).find(|&x| !seen.insert(x))
    }

    /// `π_i(P)`, the elements of color exactly `color`.
    pub fn color_slice(&self, color: u32) -> Result<PinSet> {
        if color >= self.modulus() {
            return Err(Error::ColorOutOfRange {
                color,
                modulus: self.modulus(),
            });
        }
        Ok(self.filter(|v| v.color() == color))
    }

    pub(crate) fn filter(&self, keep: impl Fn(ColoredValue) -> bool) -> PinSet {
        let elements = self.elements.iter().copied().filter(|&v| keep(v)).collect();
        Self::from_sorted_unchecked(self.ambient, elements)
    }

    /// Colors actually present, ascending.
    pub fn colors(&self) -> BTreeSet<u32> {
        self.elements.iter().map(|v| v.color()).collect()
    }
}

impl PartialOrd for PinSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by ambient, then cardinality, then elementwise by `≺`.
impl Ord for PinSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |s: &PinSet| (s.modulus(), s.degree(), s.elements.len());
        key(self)
            .cmp(&key(other))
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

/// `{xi^a(x), …}` in increasing `≺` order.
impl fmt::Display for PinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub fn magnitude_set(p: &PinSet) -> BTreeSet<u32> {
    p.magnitude_set()
}

pub fn color_slice(p: &PinSet, color: u32) -> Result<PinSet> {
    p.color_slice(color)
}
