mod common;

use common::{report, subsets};
use pinnacle_core::{
    canonical_witness, decide, decide_recursive, decide_top, max_cardinality, witnesses_of, ColoredValue, OracleBudget,
    PinSet,
};
use proptest::prelude::*;

#[test]
fn deciders_match_oracle_membership() {
    for m in 1..=3 {
        for n in 1..=7 {
            let oracle = report(m, 1, n);
            let candidates = subsets(m, n, max_cardinality(n) as usize);
            let mut admitted = 0;
            for p in &candidates {
                let a = decide(p).is_admissible();
                assert_eq!(a, decide_recursive(p).is_admissible(), "B on {p} in ({m},{n})");
                assert_eq!(a, decide_top(p).is_admissible(), "C on {p} in ({m},{n})");
                assert_eq!(a, oracle.contains(p), "oracle on {p} in ({m},{n})");
                admitted += usize::from(a);
            }
            assert_eq!(admitted, oracle.total());
        }
    }
}

#[test]
fn canonical_witness_is_sound() {
    for m in 1..=3 {
        for n in 1..=7 {
            for p in report(m, 1, n).sets().keys() {
                let w = canonical_witness(p).unwrap();
                assert_eq!(w.pinnacle_set(), *p);
                let peaks = w.peaks();
                let (pins, rest): (Vec<_>, Vec<_>) = (1..=n as usize)
                    .rev()
                    .map(|i| (i, w.at(i)))
                    .partition(|(i, _)| peaks.contains(i));
                assert!(pins.windows(2).all(|s| s[0].1 < s[1].1));
                assert!(rest.windows(2).all(|s| s[0].1 < s[1].1));
                assert!(rest.iter().all(|(_, v)| v.color() == m - 1));
            }
        }
    }
}

#[test]
fn color_sums_form_interval_ending_at_canonical() {
    for m in 1..=3 {
        for n in 1..=5 {
            let r = report(m, 1, n);
            for (p, stats) in r.sets() {
                let top = canonical_witness(p).unwrap().color_sum();
                assert_eq!(stats.eps_max(), top, "{p}");
                assert!(stats.is_contiguous(), "{p}: {:?}", stats.color_sums);
            }
        }
    }
}

#[test]
fn streamed_witnesses_respect_canonical_bound() {
    let budget = OracleBudget::default();
    for m in 1..=3 {
        for n in 1..=5 {
            let r = report(m, 1, n);
            for (p, stats) in r.sets() {
                let top = canonical_witness(p).unwrap().color_sum();
                let mut count = 0;
                for w in witnesses_of(p, common::g(m, 1, n), &budget).unwrap() {
                    assert!(w.color_sum() <= top);
                    count += 1;
                }
                assert_eq!(count, stats.witnesses);
            }
        }
    }
}

#[test]
fn inadmissible_example() {
    let p = PinSet::from_pairs(5, 7, &[(4, 3), (2, 3), (0, 1)]).unwrap();
    assert_eq!(decide(&p).to_string(), "inadmissible: repeated magnitude 3");
    assert!(!decide_recursive(&p).is_admissible());
    assert!(!decide_top(&p).is_admissible());
}

fn single_color_set() -> impl Strategy<Value = PinSet> {
    (3u32..9, 1u32..14)
        .prop_flat_map(|(m, n)| {
            let max = max_cardinality(n) as usize;
            (
                Just(m),
                Just(n),
                1..m - 1,
                proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 0..=max),
            )
        })
        .prop_map(|(m, n, c, mags)| PinSet::new(m, n, mags.into_iter().map(|x| ColoredValue::new(c, x))).unwrap())
}

proptest! {
    #[test]
    fn middle_single_color_sets_are_admissible(p in single_color_set()) {
        prop_assert!(decide(&p).is_admissible());
        prop_assert!(decide_recursive(&p).is_admissible());
        prop_assert!(decide_top(&p).is_admissible());
    }

    #[test]
    fn deciders_agree_on_random_sets(
        (m, n, picks) in (1u32..7, 1u32..16).prop_flat_map(|(m, n)| {
            let max = max_cardinality(n) as usize + 1;
            (Just(m), Just(n), proptest::collection::vec((0..m, 1..=n), 0..=max))
        })
    ) {
        let mut picks = picks;
        picks.sort();
        picks.dedup();
        let p = PinSet::from_pairs(m, n, &picks).unwrap();
        let a = decide(&p);
        prop_assert_eq!(a.is_admissible(), decide_recursive(&p).is_admissible());
        prop_assert_eq!(a.is_admissible(), decide_top(&p).is_admissible());
        if a.is_admissible() {
            prop_assert_eq!(canonical_witness(&p).unwrap().pinnacle_set(), p);
        }
    }
}
