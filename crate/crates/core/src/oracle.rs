//! Brute-force ground truth: scan every element of `G(m, p, n)` and collect
//! the pinnacle sets that occur.
//!
//! Elements are visited as magnitude words (one-line order `w(n) … w(1)`, in
//! lexicographic order) crossed with color vectors in odometer order, keeping
//! only those with `ε ≡ 0 (mod p)`. A parallel scan splits the work on the
//! value of `w(n)`; partial results merge by union, so the report does not
//! depend on how the work was split.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::admissible::decide;
use crate::count::max_cardinality;
use crate::embed::{unshift_set, ShiftParams};
use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::perm::GenPerm;
use crate::pinset::PinSet;
use crate::value::{Ambient, ColoredValue};

pub const DEFAULT_MAX_ORDER: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest group order the oracle will scan.
    pub max_order: u64,
    /// Worker threads for the scan; 1 scans serially, 0 uses the rayon default.
    pub partition_width: usize,
    /// When false, [`witnesses_of`] may return witnesses in any order.
    pub deterministic: bool,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            partition_width: 0,
            deterministic: true,
        }
    }
}

impl OracleBudget {
    pub fn with_max_order(self, max_order: u64) -> Self {
        Self { max_order, ..self }
    }

    pub fn serial(self) -> Self {
        Self {
            partition_width: 1,
            ..self
        }
    }

    pub fn check(&self, g: GroupParams) -> Result<()> {
        let required = g.order();
        if required > BigUint::from(self.max_order) {
            return Err(Error::BudgetExceeded {
                params: g,
                required,
                budget: self.max_order,
            });
        }
        Ok(())
    }
}

/// Witness statistics for one admissible set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStats {
    pub witnesses: u64,
    /// Every color sum `ε_w` attained by a witness, ascending.
    pub color_sums: Vec<u64>,
}

impl WitnessStats {
    pub fn eps_min(&self) -> u64 {
        self.color_sums[0]
    }

    pub fn eps_max(&self) -> u64 {
        *self.color_sums.last().expect("at least one witness")
    }

    /// Whether the attained color sums form an integer interval.
    pub fn is_contiguous(&self) -> bool {
        self.color_sums.len() as u64 == self.eps_max() - self.eps_min() + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    params: GroupParams,
    sets: BTreeMap<PinSet, WitnessStats>,
    scanned: u64,
}

impl OracleReport {
    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn sets(&self) -> &BTreeMap<PinSet, WitnessStats> {
        &self.sets
    }

    /// Number of group elements visited.
    pub fn scanned(&self) -> u64 {
        self.scanned
    }

    /// `#APS(m, p, n)`.
    pub fn total(&self) -> usize {
        self.sets.len()
    }

    /// `#APS_d(m, p, n)`.
    pub fn count_up_to(&self, d: usize) -> usize {
        self.sets.keys().filter(|s| s.len() <= d).count()
    }

    pub fn contains(&self, p: &PinSet) -> bool {
        self.sets.contains_key(p)
    }

    pub fn stats(&self, p: &PinSet) -> Option<&WitnessStats> {
        self.sets.get(p)
    }

    pub fn by_cardinality(&self) -> BTreeMap<usize, Vec<&PinSet>> {
        let mut out: BTreeMap<usize, Vec<&PinSet>> = BTreeMap::new();
        for s in self.sets.keys() {
            out.entry(s.len()).or_default().push(s);
        }
        out
    }
}

/// Every element of `G(m, p, n)`, each exactly once, in the canonical order.
pub fn enumerate_group(g: GroupParams, budget: &OracleBudget) -> Result<impl Iterator<Item = GenPerm>> {
    budget.check(g)?;
    let ambient = g.ambient();
    let (m, n, p) = (g.m(), g.n(), u64::from(g.p()));
    Ok((1..=n).permutations(n as usize).flat_map(move |mags| {
        (0..n)
            .map(|_| 0..m)
            .multi_cartesian_product()
            .filter(move |colors| colors.iter().map(|&c| u64::from(c)).sum::<u64>() % p == 0)
            .map(move |colors| {
                let image = colors
                    .iter()
                    .zip(&mags)
                    .rev()
                    .map(|(&a, &x)| ColoredValue::new(a, x))
                    .collect();
                GenPerm::from_parts_unchecked(ambient, image)
            })
    }))
}

/// All `w ∈ G(m, p, n)` with `Pin(w) = P`.
pub fn witnesses_of(p: &PinSet, g: GroupParams, budget: &OracleBudget) -> Result<Box<dyn Iterator<Item = GenPerm>>> {
    g.ambient().ensure_same(p.ambient())?;
    let target = p.clone();
    if budget.deterministic {
        let it = enumerate_group(g, budget)?.filter(move |w| w.pinnacle_set() == target);
        return Ok(Box::new(it));
    }
    budget.check(g)?;
    let found: Vec<GenPerm> = with_pool(budget, || {
        (1..=g.n())
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut local = Vec::new();
                Scanner::new(g).scan_partition(first, |line, _| {
                    let w = Scanner::to_perm(g.ambient(), line);
                    if w.pinnacle_set() == target {
                        local.push(w);
                    }
                });
                local
            })
            .collect()
    });
    Ok(Box::new(found.into_iter()))
}

/// The exact collection `APS(m, p, n)` with witness statistics.
pub fn collect_pinnacle_sets(g: GroupParams, budget: &OracleBudget) -> Result<OracleReport> {
    budget.check(g)?;
    let scanner = Scanner::new(g);
    let acc = if budget.partition_width == 1 {
        let mut acc = Accumulator::default();
        for first in 1..=g.n() {
            scanner.scan_into(first, &mut acc);
        }
        acc
    } else {
        with_pool(budget, || {
            (1..=g.n())
                .into_par_iter()
                .map(|first| {
                    let mut acc = Accumulator::default();
                    scanner.scan_into(first, &mut acc);
                    acc
                })
                .reduce(Accumulator::default, Accumulator::merge)
        })
    };
    Ok(acc.finish(g))
}

/// Admissibility in `G(m, p, n)`.
///
/// Only the odd-maximal case (`n = 2r + 1`, `#P = r`, `p > 1`) can differ from
/// `Z_m ≀ S_n`. There a set with some color below `m - p` is always admissible;
/// otherwise `P` is admissible iff its `Ψ_{m-p}`-preimage is admissible in
/// `G(p, p, n)`, which is settled by scanning that smaller group.
pub fn decide_in_group(p: &PinSet, g: GroupParams, budget: &OracleBudget) -> Result<bool> {
    g.ambient().ensure_same(p.ambient())?;
    if !decide(p).is_admissible() {
        return Ok(false);
    }
    let n = g.n();
    if g.p() == 1 || n % 2 == 0 || (p.len() as u32) < max_cardinality(n) || p.is_empty() {
        return Ok(true);
    }
    let shift = g.m() - g.p();
    if p.elements().iter().any(|v| v.color() < shift) {
        return Ok(true);
    }
    let s = ShiftParams::new(g.p(), shift, n)?;
    let preimage = unshift_set(p, s).expect("all colors are at least m - p");
    let small = GroupParams::new(g.p(), g.p(), n)?;
    Ok(witnesses_of(&preimage, small, budget)?.next().is_some())
}

fn with_pool<T: Send>(budget: &OracleBudget, f: impl FnOnce() -> T + Send) -> T {
    if budget.partition_width == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new()
        .num_threads(budget.partition_width)
        .build()
    {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Inner loop of the scan over plain integer arrays.
struct Scanner {
    m: u32,
    n: u32,
    p: u32,
}

impl Scanner {
    fn new(g: GroupParams) -> Self {
        Self {
            m: g.m(),
            n: g.n(),
            p: g.p(),
        }
    }

    fn to_perm(ambient: Ambient, line: &[ColoredValue]) -> GenPerm {
        GenPerm::from_parts_unchecked(ambient, line.iter().rev().copied().collect())
    }

    /// Visits every element with `w(n) = first` as a one-line word plus its
    /// `≺`-ranks (larger rank means larger value).
    fn scan_partition(&self, first: u32, mut visit: impl FnMut(&[ColoredValue], &[u32])) {
        let (m, n, p) = (self.m, self.n, self.p);
        let len = n as usize;
        let rest: Vec<u32> = (1..=n).filter(|&x| x != first).collect();
        let mut line = vec![ColoredValue::new(0, first); len];
        let mut ranks = vec![0u32; len];
        let mut colors = vec![0u32; len];
        for tail in rest.into_iter().permutations(len - 1) {
            let mags: Vec<u32> = std::iter::once(first).chain(tail).collect();
            colors.iter_mut().for_each(|c| *c = 0);
            let mut sum = 0u32;
            'colors: loop {
                if sum % p == 0 {
                    for i in 0..len {
                        line[i] = ColoredValue::new(colors[i], mags[i]);
                        ranks[i] = (m - 1 - colors[i]) * n + (n - mags[i]);
                    }
                    visit(&line, &ranks);
                }
                // odometer, last position fastest
                let mut i = len;
                loop {
                    if i == 0 {
                        break 'colors;
                    }
                    i -= 1;
                    if colors[i] + 1 < m {
                        colors[i] += 1;
                        sum += 1;
                        break;
                    }
                    sum -= colors[i];
                    colors[i] = 0;
                }
            }
        }
    }

    fn scan_into(&self, first: u32, acc: &mut Accumulator) {
        let span = (self.n * (self.m - 1)) as usize + 1;
        let mut key: Vec<u32> = Vec::with_capacity(self.n as usize / 2);
        self.scan_partition(first, |line, ranks| {
            key.clear();
            for i in 1..line.len().saturating_sub(1) {
                if ranks[i - 1] < ranks[i] && ranks[i] > ranks[i + 1] {
                    key.push(ranks[i]);
                }
            }
            key.sort_unstable();
            let eps: u32 = line.iter().map(|v| v.color()).sum();
            acc.record(&key, eps as usize, span);
        });
    }
}

#[derive(Debug, Default)]
struct RawStats {
    witnesses: u64,
    eps_bits: Vec<u64>,
}

/// Partial scan results keyed by the sorted `≺`-ranks of the pinnacles.
#[derive(Debug, Default)]
struct Accumulator {
    sets: HashMap<Box<[u32]>, RawStats>,
    scanned: u64,
}

impl Accumulator {
    fn record(&mut self, key: &[u32], eps: usize, span: usize) {
        self.scanned += 1;
        let stats = match self.sets.get_mut(key) {
            Some(s) => s,
            None => self.sets.entry(key.into()).or_insert_with(|| RawStats {
                witnesses: 0,
                eps_bits: vec![0; span.div_ceil(64)],
            }),
        };
        stats.witnesses += 1;
        stats.eps_bits[eps / 64] |= 1 << (eps % 64);
    }

    fn merge(mut self, other: Accumulator) -> Accumulator {
        self.scanned += other.scanned;
        for (key, theirs) in other.sets {
            match self.sets.get_mut(&key) {
                Some(ours) => {
                    ours.witnesses += theirs.witnesses;
                    for (a, b) in ours.eps_bits.iter_mut().zip(theirs.eps_bits) {
                        *a |= b;
                    }
                }
                None => {
                    self.sets.insert(key, theirs);
                }
            }
        }
        self
    }

    fn finish(self, g: GroupParams) -> OracleReport {
        let ambient = g.ambient();
        let n = g.n();
        let m = g.m();
        let sets = self
            .sets
            .into_iter()
            .map(|(key, raw)| {
                let elements = key.iter().map(|&r| {
                    let color = m - 1 - r / n;
                    let magnitude = n - r % n;
                    ColoredValue::new(color, magnitude)
                });
                let set = PinSet::in_ambient(ambient, elements).expect("scanned values lie in I_n^m");
                let color_sums = raw
                    .eps_bits
                    .iter()
                    .enumerate()
                    .flat_map(|(word, &bits)| {
                        (0..64)
                            .filter(move |b| bits >> b & 1 == 1)
                            .map(move |b| (word * 64 + b) as u64)
                    })
                    .collect();
                let stats = WitnessStats {
                    witnesses: raw.witnesses,
                    color_sums,
                };
                (set, stats)
            })
            .collect();
        OracleReport {
            params: g,
            sets,
            scanned: self.scanned,
        }
    }
}
