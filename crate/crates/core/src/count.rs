//! Exact counts `p_{m,n}(d) = #APS_d(m, n)` and `#APS_d(m, p, n)`.
//!
//! Four independent routes compute `p_{m,n}(d)`:
//!
//! | method | identity |
//! |---|---|
//! | recursion in `m` | `p_{m,n}(d) = Σ_{i≤d} C(n,i) p_{m-1,n-i}(d-i)`, `p_{1,n}(d) = C(n-1,d)` |
//! | recursion in `n` | `p_{m,n}(d) = m p_{m,n-1}(d-1) + p_{m,n-1}(d)` |
//! | alternating sum | `p_{m,n}(d) = Σ_{i≤d} C(n,i) m^i (-1)^{i+d}` |
//! | positive sum | `p_{m,n}(d) = Σ_{k≤d} (m-1)^k C(n,k) C(n-k-1,d-k)` |
//!
//! The recursion in `n` steps through `(n-1, d)` even when `d` exceeds
//! `⌊(n-2)/2⌋`, so it runs over the signed polynomial extension of
//! `p_{m,n}(d)` to all `d ≥ 0`, `n ≥ 0` (with `p_{m,0}(d) = (-1)^d`), not over
//! set counts.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::oracle::{collect_pinnacle_sets, OracleBudget};

pub type Count = BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    RecursionM,
    RecursionN,
    ClosedAlternating,
    ClosedPositive,
    /// Run all four and require agreement.
    All,
}

impl Method {
    pub const INDEPENDENT: [Method; 4] = [
        Method::RecursionM,
        Method::RecursionN,
        Method::ClosedAlternating,
        Method::ClosedPositive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::RecursionM => "recursion-m",
            Method::RecursionN => "recursion-n",
            Method::ClosedAlternating => "closed-alternating",
            Method::ClosedPositive => "closed-positive",
            Method::All => "all",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        [Method::All]
            .into_iter()
            .chain(Method::INDEPENDENT)
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// `⌊(n-1)/2⌋`, the largest pinnacle-set cardinality in degree `n`.
pub fn max_cardinality(n: u32) -> u32 {
    n.saturating_sub(1) / 2
}

fn validate(m: u32, n: u32, d: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let max = max_cardinality(n);
    if d > max {
        return Err(Error::CardinalityOutOfRange { n, d, max });
    }
    Ok(())
}

fn binom(n: u32, k: u32) -> BigUint {
    if k > n {
        BigUint::zero()
    } else {
        binomial(BigUint::from(n), BigUint::from(k))
    }
}

fn sign(even: bool) -> BigInt {
    if even {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Memo tables for the two recursions, keyed on `(m, n, d)`.
///
/// Reads proceed concurrently; inserts take the write lock briefly.
#[derive(Debug, Default)]
pub struct CountMemo {
    by_modulus: RwLock<HashMap<(u32, u32, u32), BigUint>>,
    by_degree: RwLock<HashMap<(u32, u32, u32), BigInt>>,
}

impl CountMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide memo used by the free functions.
    pub fn global() -> &'static CountMemo {
        static MEMO: OnceLock<CountMemo> = OnceLock::new();
        MEMO.get_or_init(CountMemo::new)
    }

    pub fn len(&self) -> usize {
        self.by_modulus.read().unwrap().len() + self.by_degree.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn recursion_m(&self, m: u32, n: u32, d: u32) -> Result<Count> {
        validate(m, n, d)?;
        if let Some(v) = self.by_modulus.read().unwrap().get(&(m, n, d)) {
            return Ok(v.clone());
        }
        // Every state reachable from (m, n, d) has n' - d' = n - d, so one
        // row per modulus indexed by d' covers the whole recursion.
        let base = n - d;
        let mut row: Vec<BigUint> = (0..=d).map(|t| binom(base + t - 1, t)).collect();
        let mut fresh = Vec::new();
        for level in 2..=m {
            let next: Vec<BigUint> = (0..=d)
                .map(|t| (0..=t).map(|i| binom(base + t, i) * &row[(t - i) as usize]).sum())
                .collect();
            row = next;
            fresh.push((level, row.clone()));
        }
        let mut table = self.by_modulus.write().unwrap();
        for (level, values) in fresh {
            for (t, v) in values.into_iter().enumerate() {
                table.insert((level, base + t as u32, t as u32), v);
            }
        }
        Ok(row.pop().expect("row has d + 1 entries"))
    }

    pub fn recursion_n(&self, m: u32, n: u32, d: u32) -> Result<Count> {
        validate(m, n, d)?;
        if d == 0 {
            return Ok(BigUint::one());
        }
        if m == 1 {
            return Ok(binom(n - 1, d));
        }
        let v = self.extended(m, n, d);
        Ok(v.to_biguint().expect("in range the count is nonnegative"))
    }

    /// Signed extension `q(m, n', d')`, filled bottom-up over `n'`.
    fn extended(&self, m: u32, n: u32, d: u32) -> BigInt {
        if let Some(v) = self.by_degree.read().unwrap().get(&(m, n, d)) {
            return v.clone();
        }
        let mg = BigInt::from(m);
        let mut row: Vec<BigInt> = (0..=d).map(|t| sign(t % 2 == 0)).collect();
        for _ in 1..=n {
            let mut next = Vec::with_capacity(row.len());
            next.push(BigInt::one());
            for t in 1..row.len() {
                next.push(&mg * &row[t - 1] + &row[t]);
            }
            row = next;
        }
        let v = row.pop().expect("row has d + 1 entries");
        self.by_degree.write().unwrap().insert((m, n, d), v.clone());
        v
    }
}

pub fn count_recursion_m(m: u32, n: u32, d: u32) -> Result<Count> {
    CountMemo::global().recursion_m(m, n, d)
}

pub fn count_recursion_n(m: u32, n: u32, d: u32) -> Result<Count> {
    CountMemo::global().recursion_n(m, n, d)
}

pub fn count_closed_alternating(m: u32, n: u32, d: u32) -> Result<Count> {
    validate(m, n, d)?;
    let mg = BigInt::from(m);
    let total: BigInt = (0..=d)
        .map(|i| sign((i + d) % 2 == 0) * BigInt::from(binom(n, i)) * mg.pow(i))
        .sum();
    Ok(total.to_biguint().expect("alternating sum is nonnegative in range"))
}

pub fn count_closed_positive(m: u32, n: u32, d: u32) -> Result<Count> {
    validate(m, n, d)?;
    let base = BigUint::from(m - 1);
    Ok((0..=d)
        .map(|k| base.pow(k) * binom(n, k) * binom(n - k - 1, d - k))
        .sum())
}

pub fn count_with(method: Method, m: u32, n: u32, d: u32) -> Result<Count> {
    match method {
        Method::RecursionM => count_recursion_m(m, n, d),
        Method::RecursionN => count_recursion_n(m, n, d),
        Method::ClosedAlternating => count_closed_alternating(m, n, d),
        Method::ClosedPositive => count_closed_positive(m, n, d),
        Method::All => {
            let values = Method::INDEPENDENT
                .into_iter()
                .map(|k| count_with(k, m, n, d).map(|v| (k, v)))
                .collect::<Result<Vec<_>>>()?;
            cross_validate(m, n, d, values)
        }
    }
}

/// Returns the common value, or [`Error::CountMismatch`] listing every result.
pub fn cross_validate(m: u32, n: u32, d: u32, values: Vec<(Method, Count)>) -> Result<Count> {
    let first = values.first().map(|(_, v)| v.clone()).unwrap_or_default();
    if values.iter().all(|(_, v)| *v == first) {
        Ok(first)
    } else {
        Err(Error::CountMismatch { m, n, d, values })
    }
}

/// `#APS(m, n)`, i.e. `p_{m,n}(⌊(n-1)/2⌋)`.
pub fn count_total(m: u32, n: u32, method: Method) -> Result<Count> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    count_with(method, m, n, max_cardinality(n))
}

/// `Σ_{i=0}^r C(2r+1, i) p^i (k^i - 1) (-1)^{i+r}` with `k = m / p`, which is
/// `#APS(m,1,2r+1) - #APS(p,1,2r+1)`.
pub fn odd_reduction_offset(m: u32, p: u32, r: u32) -> BigInt {
    let k = BigInt::from(m / p);
    let pg = BigInt::from(p);
    (0..=r)
        .map(|i| sign((i + r) % 2 == 0) * BigInt::from(binom(2 * r + 1, i)) * pg.pow(i) * (k.pow(i) - BigInt::one()))
        .sum()
}

/// `#APS_d(m, p, n)`; `d` defaults to `⌊(n-1)/2⌋`.
///
/// Away from the odd-maximal case (`n = 2r + 1`, `d = r`) this equals
/// `p_{m,n}(d)`. In the odd-maximal case the count is
/// `#APS(p,p,2r+1) + odd_reduction_offset(m, p, r)`, where the first term has
/// no known closed form and is obtained by exhaustive scan of `G(p,p,2r+1)`
/// under `budget`.
pub fn count_complex(g: GroupParams, d: Option<u32>, method: Method, budget: &OracleBudget) -> Result<Count> {
    let (m, p, n) = (g.m(), g.p(), g.n());
    let d = d.unwrap_or(max_cardinality(n));
    validate(m, n, d)?;
    if !is_odd_maximal(g, d) {
        return count_with(method, m, n, d);
    }
    let r = (n - 1) / 2;
    let irreducible = GroupParams::new(p, p, n)?;
    let base = collect_pinnacle_sets(irreducible, budget)?.total();
    let total = BigInt::from(base) + odd_reduction_offset(m, p, r);
    Ok(total.to_biguint().expect("counts are nonnegative"))
}

/// Whether `(g, d)` is the regime `n = 2r + 1, d = r, p > 1` where
/// `APS_d(m,p,n)` can differ from `APS_d(m,1,n)`.
pub fn is_odd_maximal(g: GroupParams, d: u32) -> bool {
    g.p() > 1 && g.n() % 2 == 1 && d == max_cardinality(g.n()) && d > 0
}
