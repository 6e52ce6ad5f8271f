mod common;

use common::{all_perms, g, random_perm};
use pinnacle_core::{ColoredValue, GenPerm, OracleBudget};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_axioms(a: &GenPerm, b: &GenPerm, c: &GenPerm) {
    let m = u64::from(a.modulus());
    let id = GenPerm::identity(a.modulus(), a.degree()).unwrap();
    let ab = a.multiply(b).unwrap();
    assert_eq!(ab.multiply(c).unwrap(), a.multiply(&b.multiply(c).unwrap()).unwrap());
    assert_eq!(a.multiply(&id).unwrap(), *a);
    assert_eq!(id.multiply(a).unwrap(), *a);
    assert!(a.multiply(&a.inverse()).unwrap().is_identity());
    assert!(a.inverse().multiply(a).unwrap().is_identity());
    assert_eq!(ab.color_sum() % m, (a.color_sum() + b.color_sum()) % m);
    for v in a.ambient().elements() {
        assert_eq!(ab.apply(v), a.apply(b.apply(v)));
    }
}

#[test]
fn axioms_exhaustive_small() {
    for m in 1..=2 {
        for n in 1..=3 {
            let all = all_perms(m, n);
            for a in &all {
                for b in &all {
                    for c in &all {
                        check_axioms(a, b, c);
                    }
                }
            }
        }
    }
}

#[test]
fn subgroup_closure_exhaustive() {
    for m in 1..=4 {
        for n in 1..=3 {
            let all = all_perms(m, n);
            for p in common::divisors(m) {
                let sub = g(m, p, n);
                let members: Vec<_> = all.iter().filter(|w| sub.contains(w).unwrap()).collect();
                assert_eq!(members.len() as u64 * u64::from(p), all.len() as u64);
                for a in &members {
                    assert!(sub.contains(&a.inverse()).unwrap());
                    for b in &members {
                        assert!(sub.contains(&a.multiply(b).unwrap()).unwrap());
                        assert_eq!(
                            a.multiply(b).unwrap().color_sum() % u64::from(m),
                            (a.color_sum() + b.color_sum()) % u64::from(m)
                        );
                    }
                }
                let streamed = pinnacle_core::enumerate_group(sub, &OracleBudget::default())
                    .unwrap()
                    .count();
                assert_eq!(streamed, members.len());
            }
        }
    }
}

#[test]
fn axioms_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let m = rng.gen_range(1..=8);
        let n = rng.gen_range(1..=10);
        let a = random_perm(&mut rng, m, n);
        let b = random_perm(&mut rng, m, n);
        let c = random_perm(&mut rng, m, n);
        check_axioms(&a, &b, &c);
        let p = common::divisors(m)
            .nth(rng.gen_range(0..common::divisors(m).count()))
            .unwrap();
        let sub = g(m, p, n);
        if sub.contains(&a).unwrap() && sub.contains(&b).unwrap() {
            assert!(sub.contains(&a.multiply(&b).unwrap()).unwrap());
            assert!(sub.contains(&a.inverse()).unwrap());
        }
    }
}

#[test]
fn pinnacle_sets_are_short_and_magnitude_distinct() {
    for m in 1..=3 {
        for n in 1..=6 {
            let max = pinnacle_core::max_cardinality(n);
            for w in pinnacle_core::enumerate_group(g(m, 1, n), &OracleBudget::default()).unwrap() {
                let pin = w.pinnacle_set();
                assert!(pin.len() as u32 <= max);
                assert_eq!(pin.repeated_magnitude(), None);
                assert_eq!(pin.len(), w.peaks().len());
            }
        }
    }
}

fn value(m: u32, n: u32) -> impl Strategy<Value = ColoredValue> {
    (0..m, 1..=n).prop_map(|(a, x)| ColoredValue::new(a, x))
}

proptest! {
    #[test]
    fn order_is_strict_total(
        (m, n, u, v, w) in (1u32..8, 1u32..12).prop_flat_map(|(m, n)| {
            (Just(m), Just(n), value(m, n), value(m, n), value(m, n))
        })
    ) {
        let amb = pinnacle_core::Ambient::new(m, n).unwrap();
        let uv = amb.compare(u, v).unwrap();
        prop_assert_eq!(uv, amb.compare(v, u).unwrap().reverse());
        prop_assert_eq!(uv == std::cmp::Ordering::Equal, u == v);
        if u < v && v < w {
            prop_assert!(u < w);
        }
        // higher color is smaller; within a color, larger magnitude is smaller
        if u.color() != v.color() {
            prop_assert_eq!(u < v, u.color() > v.color());
        } else {
            prop_assert_eq!(u < v, u.magnitude() > v.magnitude());
        }
    }

    #[test]
    fn inverse_and_one_line_round_trip(seed in any::<u64>(), m in 1u32..6, n in 1u32..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_perm(&mut rng, m, n);
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        let pairs: Vec<_> = w.one_line().map(|v| (v.color(), v.magnitude())).collect();
        prop_assert_eq!(GenPerm::from_one_line(m, &pairs).unwrap(), w);
    }
}
