#![allow(dead_code)]

use itertools::Itertools;
use pinnacle_core::{Ambient, ColoredValue, GenPerm, GroupParams, OracleBudget, OracleReport, PinSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn g(m: u32, p: u32, n: u32) -> GroupParams {
    GroupParams::new(m, p, n).unwrap()
}

pub fn report(m: u32, p: u32, n: u32) -> OracleReport {
    let budget = OracleBudget::default().with_max_order(20_000_000);
    pinnacle_core::collect_pinnacle_sets(g(m, p, n), &budget).unwrap()
}

pub fn divisors(m: u32) -> impl Iterator<Item = u32> {
    (1..=m).filter(move |p| m % p == 0)
}

/// Every subset of `I_n^m` with at most `max` elements.
pub fn subsets(m: u32, n: u32, max: usize) -> Vec<PinSet> {
    let ambient = Ambient::new(m, n).unwrap();
    let all: Vec<ColoredValue> = ambient.elements().collect();
    (0..=max.min(all.len()))
        .flat_map(|k| all.iter().copied().combinations(k))
        .map(|c| PinSet::in_ambient(ambient, c).unwrap())
        .collect()
}

pub fn random_perm(rng: &mut impl Rng, m: u32, n: u32) -> GenPerm {
    let mut mags: Vec<u32> = (1..=n).collect();
    mags.shuffle(rng);
    let image = mags
        .into_iter()
        .map(|x| ColoredValue::new(rng.gen_range(0..m), x))
        .collect();
    GenPerm::new(m, image).unwrap()
}

pub fn all_perms(m: u32, n: u32) -> Vec<GenPerm> {
    pinnacle_core::enumerate_group(g(m, 1, n), &OracleBudget::default())
        .unwrap()
        .collect()
}
