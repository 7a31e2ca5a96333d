use std::collections::BTreeMap;

use num_bigint::BigInt;
use qmark_core::durfee::{
    ag_statistic, dissection_generating_function, find_dissections, find_relaxed_dissections, is_admissible,
    Dissection,
};
use qmark_core::partitions::{enumerate, ConstraintSet, Partition};
use qmark_core::qseries::multisum_f;

const GRID: [(usize, usize); 6] = [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 2)];

#[test]
fn admissible_counts_match_multisum() {
    for (k, a) in GRID {
        let f = multisum_f::<BigInt>(k, a, 20).unwrap();
        for n in 0..=20 {
            let c = enumerate(n, &ConstraintSet::all())
                .iter()
                .filter(|l| is_admissible(l, k, a))
                .count();
            assert_eq!(BigInt::from(c), f.coeff(n, 0), "k={k} a={a} n={n}");
        }
    }
}

#[test]
fn dissections_are_unique() {
    for (k, a) in GRID {
        for n in 0..=20 {
            for l in enumerate(n, &ConstraintSet::all()) {
                assert!(find_dissections(&l, k, a).len() <= 1, "{l} k={k} a={a}");
            }
        }
    }
}

fn tally(k: usize, a: usize, cutoff: usize, relaxed: bool) -> BTreeMap<Dissection, Vec<usize>> {
    let mut by_widths: BTreeMap<Dissection, Vec<usize>> = BTreeMap::new();
    for n in 0..=cutoff {
        for l in enumerate(n, &ConstraintSet::all()) {
            let ds = if relaxed {
                find_relaxed_dissections(&l, k, a)
            } else {
                find_dissections(&l, k, a)
            };
            for d in ds {
                by_widths.entry(d).or_insert_with(|| vec![0; cutoff + 1])[n] += 1;
            }
        }
    }
    by_widths
}

fn width_sequences(max_len: usize, max_width: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let top = w.last().copied().unwrap_or(max_width);
            for n in 1..=top {
                let mut v: Vec<usize> = w.clone();
                v.push(n);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn fixed_dissection_generating_function() {
    let cutoff = 15;
    for a in 0..=3 {
        let k = 3;
        let counts = tally(k, a, cutoff, false);
        for widths in width_sequences(3, 3) {
            let split = widths.len().min(k - a);
            let d = Dissection {
                square_widths: widths[..split].to_vec(),
                rect_widths: widths[split..].to_vec(),
            };
            let gf = dissection_generating_function(&d, cutoff).unwrap();
            let empty = vec![0; cutoff + 1];
            let seen = counts.get(&d).unwrap_or(&empty);
            for (n, &c) in seen.iter().enumerate() {
                assert_eq!(BigInt::from(c), gf.coeff(n, 0), "{d} n={n}");
            }
        }
    }
}

#[test]
fn relaxed_reading_breaks_the_generating_function() {
    let counts = tally(2, 0, 8, true);
    let d = Dissection { square_widths: vec![1, 1], rect_widths: vec![] };
    let gf = dissection_generating_function(&d, 8).unwrap();
    assert_ne!(BigInt::from(counts[&d][4]), gf.coeff(4, 0));
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn table_one_right_column() {
    let expected: BTreeMap<Partition, usize> = [
        ("10", 3),
        ("6,1,1,1,1", 1),
        ("4,2,1,1,1,1", 0),
        ("3,2,2,1,1,1", 0),
        ("3,3,1,1,1,1", 0),
        ("8,1,1", 2),
        ("6,2,1,1", 1),
        ("5,3,1,1", 0),
        ("5,2,2,1", 1),
        ("2,2,2,2,2", 0),
        ("4,4,1,1", 0),
        ("4,3,2,1", 0),
        ("8,2", 2),
        ("7,3", 1),
        ("6,4", 0),
        ("5,5", 0),
        ("4,3,3", 0),
    ]
    .iter()
    .map(|&(s, j)| (p(s), j))
    .collect();
    let got: BTreeMap<Partition, usize> = enumerate(10, &ConstraintSet::all())
        .into_iter()
        .filter(|l| is_admissible(l, 3, 2))
        .map(|l| {
            let j = ag_statistic(&l, 3, 3, 2).unwrap();
            (l, j)
        })
        .collect();
    assert_eq!(got, expected);
}
