use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::GenPerm;
use crate::value::Ambient;

/// Parameters `(m, p, n)` of the complex reflection group `G(m, p, n)`,
/// the subgroup of `Z_m ≀ S_n` whose color sum is divisible by `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupParams {
    m: u32,
    p: u32,
    n: u32,
}

impl GroupParams {
    pub fn new(m: u32, p: u32, n: u32) -> Result<Self> {
        if m == 0 || p == 0 {
            return Err(Error::ZeroModulus);
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if m % p != 0 {
            return Err(Error::NonDividingP { m, p });
        }
        Ok(Self { m, p, n })
    }

    /// The full generalized symmetric group `Z_m ≀ S_n = G(m, 1, n)`.
    pub fn wreath(m: u32, n: u32) -> Result<Self> {
        Self::new(m, 1, n)
    }

    pub const fn m(self) -> u32 {
        self.m
    }

    pub const fn p(self) -> u32 {
        self.p
    }

    pub const fn n(self) -> u32 {
        self.n
    }

    /// `k = m / p`.
    pub const fn index_quotient(self) -> u32 {
        self.m / self.p
    }

    pub fn ambient(self) -> Ambient {
        Ambient::new(self.m, self.n).expect("validated on construction")
    }

    /// Group order `m^n · n! / p`.
    pub fn order(self) -> BigUint {
        let mut order = BigUint::from(self.m).pow(self.n);
        let mut fact = BigUint::one();
        for i in 2..=self.n {
            fact *= i;
        }
        order *= fact;
        order / self.p
    }

    /// Whether `w` lies in this subgroup, i.e. `ε_w ≡ 0 (mod p)`.
    pub fn contains(self, w: &GenPerm) -> Result<bool> {
        self.ambient().ensure_same(w.ambient())?;
        Ok(w.color_sum() % u64::from(self.p) == 0)
    }
}

pub fn in_subgroup(w: &GenPerm, g: GroupParams) -> Result<bool> {
    g.contains(w)
}
