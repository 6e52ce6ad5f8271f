mod common;

use std::collections::BTreeSet;

use common::{divisors, g, report};
use num_bigint::{BigInt, BigUint};
use pinnacle_core::{
    count_complex, count_with, max_cardinality, odd_reduction_offset, shift_set, Method, OracleBudget, PinSet,
    ShiftParams,
};

fn p(m: u32, n: u32, d: u32) -> BigUint {
    count_with(Method::ClosedPositive, m, n, d).unwrap()
}

#[test]
fn four_methods_agree() {
    for m in 1..=20 {
        for n in 1..=30 {
            for d in 0..=max_cardinality(n) {
                let values: Vec<_> = Method::INDEPENDENT
                    .into_iter()
                    .map(|k| count_with(k, m, n, d).unwrap())
                    .collect();
                assert!(values.iter().all(|v| *v == values[0]), "({m},{n},{d}): {values:?}");
            }
        }
    }
}

#[test]
fn formulas_match_oracle() {
    let grid = (1..=3)
        .flat_map(|m| (1..=7).map(move |n| (m, n)))
        .chain((1..=6).map(|n| (4, n)));
    for (m, n) in grid {
        let r = report(m, 1, n);
        for d in 0..=max_cardinality(n) {
            assert_eq!(BigUint::from(r.count_up_to(d as usize)), p(m, n, d), "({m},{n},{d})");
        }
    }
}

#[test]
fn filtrations_are_monotone() {
    for n in 1..=20 {
        for d in 0..=max_cardinality(n) {
            for m in 1..=12 {
                assert!(p(m, n, d) > BigUint::default());
                if d < max_cardinality(n) {
                    assert!(p(m, n, d) <= p(m, n, d + 1));
                }
                assert!(p(m, n, d) <= p(m + 1, n, d));
            }
        }
    }
}

#[test]
fn subgroups_agree_below_odd_maximal() {
    for m in 1..=4 {
        for q in divisors(m) {
            for n in 1..=6 {
                let r = report(m, q, n);
                let bound = n.saturating_sub(1).div_ceil(2);
                for d in 0..bound {
                    assert_eq!(
                        BigUint::from(r.count_up_to(d as usize)),
                        p(m, n, d),
                        "({m},{q},{n},{d})"
                    );
                }
                if n % 2 == 0 {
                    assert_eq!(BigUint::from(r.total()), p(m, n, max_cardinality(n)));
                }
            }
        }
    }
    assert_eq!(report(4, 2, 6).total(), 217);
}

#[test]
fn complex_count_matches_oracle() {
    let budget = OracleBudget::default();
    for m in 1..=4 {
        for q in divisors(m) {
            for n in 1..=6 {
                let r = report(m, q, n);
                for d in 0..=max_cardinality(n) {
                    let c = count_complex(g(m, q, n), Some(d), Method::All, &budget).unwrap();
                    assert_eq!(c, BigUint::from(r.count_up_to(d as usize)), "({m},{q},{n},{d})");
                }
            }
        }
    }
}

fn complement(m: u32, q: u32, n: u32) -> BTreeSet<PinSet> {
    let sub = report(m, q, n);
    report(m, 1, n)
        .sets()
        .keys()
        .filter(|s| !sub.contains(s))
        .cloned()
        .collect()
}

#[test]
fn complement_is_shifted_irreducible_complement() {
    for r in 1..=2 {
        let n = 2 * r + 1;
        let s = ShiftParams::new(2, 2, n).unwrap();
        let lifted: BTreeSet<PinSet> = complement(2, 2, n).iter().map(|x| shift_set(x, s).unwrap()).collect();
        assert_eq!(complement(4, 2, n), lifted, "r={r}");
        assert!(!lifted.is_empty());

        let total = BigInt::from(report(2, 2, n).total()) + odd_reduction_offset(4, 2, r);
        assert_eq!(total, BigInt::from(report(4, 2, n).total()));
        let full_gap = BigInt::from(report(4, 1, n).total()) - BigInt::from(report(2, 1, n).total());
        assert_eq!(odd_reduction_offset(4, 2, r), full_gap);
    }
}

#[test]
fn complement_criterion_by_color_sums() {
    for m in 2..=4 {
        for q in divisors(m).filter(|&q| q > 1) {
            for n in 1..=6 {
                let full = report(m, 1, n);
                let sub = report(m, q, n);
                for (set, stats) in full.sets() {
                    let hits = (stats.eps_min()..=stats.eps_max()).any(|e| e % u64::from(q) == 0);
                    assert_eq!(hits, sub.contains(set), "{set} in ({m},{q},{n})");
                }
            }
        }
    }
}

#[test]
fn low_colors_survive_in_subgroup() {
    for n in [3, 5] {
        let sub = report(4, 2, n);
        for set in report(4, 1, n).sets().keys() {
            if set.elements().iter().any(|v| v.color() < 2) {
                assert!(sub.contains(set), "{set}");
            }
        }
    }
}

#[test]
fn reports_do_not_depend_on_partitioning() {
    let base = OracleBudget::default();
    for (m, q, n) in [(2, 2, 5), (3, 1, 5), (4, 2, 5), (2, 1, 6)] {
        let reference = pinnacle_core::collect_pinnacle_sets(g(m, q, n), &base.serial()).unwrap();
        for width in [0, 2, 3, 7] {
            let b = OracleBudget {
                partition_width: width,
                ..base
            };
            assert_eq!(pinnacle_core::collect_pinnacle_sets(g(m, q, n), &b).unwrap(), reference);
        }
    }
}
