use std::collections::BTreeSet;

use proptest::prelude::*;
use qmark_core::bijections::{fishhook, fishhook_inverse, fishhook_m, fishhook_m_inverse};
use qmark_core::partitions::{enumerate, mark_statistic, ConstraintSet, GapRule, Partition, StatisticId};

fn distinct(n: usize) -> Vec<Partition> {
    enumerate(n, &ConstraintSet::with_gap_rule(GapRule::Distinct))
}

fn odd(n: usize) -> Vec<Partition> {
    enumerate(n, &ConstraintSet::residues(2, &[1]).unwrap())
}

#[test]
fn fishhook_is_a_bijection_with_the_ones_property() {
    for n in 0..=30 {
        let image: BTreeSet<Partition> = distinct(n)
            .iter()
            .map(|l| {
                let mu = fishhook(l).unwrap();
                assert_eq!(mu.weight(), n);
                assert!(mu.parts().iter().all(|p| p % 2 == 1));
                if l.len() >= 2 {
                    assert_eq!(mu.multiplicity(1), l.part(1) - l.part(2) - 1, "{l}");
                }
                assert_eq!(&fishhook_inverse(&mu).unwrap(), l);
                mu
            })
            .collect();
        let targets: BTreeSet<Partition> = odd(n).into_iter().collect();
        assert_eq!(image, targets, "n={n}");
    }
}

#[test]
fn marked_fishhook_is_a_bijection_counting_m() {
    for m in [1, 3, 5, 7, 9] {
        for n in 0..=30 {
            let image: BTreeSet<Partition> = distinct(n)
                .iter()
                .map(|l| {
                    let mu = fishhook_m(l, m).unwrap();
                    assert_eq!(mu.multiplicity(m), mark_statistic(StatisticId::EulerMark, l, m).unwrap());
                    assert_eq!(&fishhook_m_inverse(&mu, m).unwrap(), l, "M={m} λ={l}");
                    mu
                })
                .collect();
            let targets: BTreeSet<Partition> = odd(n).into_iter().collect();
            assert_eq!(image, targets, "M={m} n={n}");
            for mu in &targets {
                assert_eq!(&fishhook_m(&fishhook_m_inverse(mu, m).unwrap(), m).unwrap(), mu);
            }
        }
    }
}

#[test]
fn marked_fishhook_at_m1_agrees_with_fishhook() {
    for n in 0..=24 {
        for l in distinct(n).iter().filter(|l| l.len() >= 2) {
            assert_eq!(fishhook_m(l, 1).unwrap(), fishhook(l).unwrap(), "{l}");
        }
    }
}

#[test]
fn marked_fishhook_ones_discipline() {
    for m in [3, 5, 7] {
        for n in 1..=24 {
            for l in distinct(n).iter().filter(|l| l.len() >= 2) {
                let k = (l.part(1) - l.part(2) - 1) / m;
                let mut theta = l.parts().to_vec();
                theta[0] -= k * m;
                let gamma = fishhook(&Partition::new(theta).unwrap()).unwrap();
                let ones = fishhook_m(l, m).unwrap().multiplicity(1);
                if gamma.multiplicity(m) == 0 {
                    assert!(ones < m);
                } else {
                    assert!(ones >= m);
                }
            }
        }
    }
}

#[test]
fn combthm2_example_pairs_as_sets() {
    let left: BTreeSet<Partition> = ["16,2", "15,3", "15,2,1", "14,3,1"]
        .iter()
        .map(|s| fishhook_m(&s.parse().unwrap(), 5).unwrap())
        .collect();
    let right: BTreeSet<Partition> = ["7,5,5,1", "5,5,3,3,1,1", "5,5,3,1^5", "5,5,1^8"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(left, right);
}

fn distinct_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1usize..40, 0..8)
        .prop_map(|s| Partition::from_unsorted(s.into_iter().collect()).unwrap())
}

proptest! {
    #[test]
    fn fishhook_round_trips(l in distinct_strategy(), m in (0usize..6).prop_map(|i| 2 * i + 1)) {
        let mu = fishhook_m(&l, m).unwrap();
        prop_assert_eq!(mu.weight(), l.weight());
        prop_assert_eq!(fishhook_m_inverse(&mu, m).unwrap(), l.clone());
        prop_assert_eq!(fishhook_inverse(&fishhook(&l).unwrap()).unwrap(), l);
    }
}
