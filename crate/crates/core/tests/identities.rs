use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use qmark_core::identities::{
    comb_registry, embedding_table, find_comb, find_series, registry, verify_combinatorial, verify_inequality,
    verify_marked_sum, verify_series, witness_sets, Params, Status, VerifyError, Witness,
};
use qmark_core::partitions::{enumerate, ConstraintSet, GapRule, Partition};
use qmark_core::qseries::{apply_marking, inv_pochhammer, Count};
use qmark_core::Series;
use serde::Deserialize;

/// Partitions of `n` into parts accepted by `ok`, parts at most `max`, by
/// plain recursion.
fn oracle(n: usize, max: usize, ok: &dyn Fn(usize) -> bool) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in (1..=max.min(n)).rev().filter(|&p| ok(p)) {
        for mut rest in oracle(n - p, p, ok) {
            rest.insert(0, p);
            out.push(rest);
        }
    }
    out
}

fn count_with(n: usize, ok: &dyn Fn(usize) -> bool, m: usize, k: usize) -> usize {
    oracle(n, n, ok)
        .iter()
        .filter(|p| p.iter().filter(|&&x| x == m).count() == k)
        .count()
}

fn set(ps: &[Partition]) -> BTreeSet<Vec<usize>> {
    ps.iter().map(|p| p.parts().to_vec()).collect()
}

#[derive(Deserialize)]
struct Example {
    theorem: String,
    params: Params,
    n: usize,
    k: usize,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

#[test]
fn worked_examples_reproduce() {
    let examples: Vec<Example> = serde_json::from_str(include_str!("golden/worked_examples.json")).unwrap();
    assert_eq!(examples.len(), 9);
    for ex in examples {
        let (left, right) = witness_sets(&ex.theorem, &ex.params, ex.n, ex.k).unwrap();
        let want_left: BTreeSet<Vec<usize>> = ex.left.into_iter().collect();
        let want_right: BTreeSet<Vec<usize>> = ex.right.into_iter().collect();
        assert_eq!(set(&left), want_left, "{} left", ex.theorem);
        assert_eq!(set(&right), want_right, "{} right", ex.theorem);
        assert_eq!(left.len(), want_left.len(), "{} left duplicates", ex.theorem);
    }
}

#[test]
fn weirdshift_disallowed_gap2_partitions() {
    let gap2: BTreeSet<Vec<usize>> = enumerate(13, &ConstraintSet::with_gap_rule(GapRule::Gap2))
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    let (_, right) = witness_sets("weirdshift", &Params::none(), 13, 0).unwrap();
    let excluded: BTreeSet<Vec<usize>> = gap2.difference(&set(&right)).cloned().collect();
    let want: BTreeSet<Vec<usize>> = [vec![13], vec![11, 2], vec![8, 5], vec![9, 3, 1], vec![7, 4, 2]]
        .into_iter()
        .collect();
    assert_eq!(excluded, want);
}

#[test]
fn ggxcomb_excludes_even_second_part() {
    let (_, right) = witness_sets("ggxcomb", &Params::with_m(7), 31, 3).unwrap();
    assert!(!set(&right).contains(&vec![27, 4]));
}

#[test]
fn registry_shape() {
    let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
    assert!(ids.len() >= 14);
    for id in ["rr1", "rr1x", "rr2x", "euler-marked", "gg1", "gg2", "gg1x", "gg2x", "ag", "agbig", "shift23", "qeuler"] {
        assert!(ids.contains(&id), "{id}");
    }
    assert_eq!(ids.iter().filter(|i| i.starts_with("mainprop-")).count(), 6);
    assert_eq!(comb_registry().len(), 14);
}

#[test]
fn rr1x_at_one_is_rr1() {
    let rr1 = find_series("rr1").unwrap();
    let rr1x = find_series("rr1x").unwrap();
    let plain = rr1.lhs(&Params::none(), 50).unwrap();
    for m in [1, 4, 6, 9, 11] {
        let marked = rr1x.rhs(&Params::with_m(m), 50).unwrap();
        assert_eq!(marked.eval_w(&BigInt::from(1)).unwrap(), plain, "M={m}");
    }
}

#[test]
fn rr1x_m9_is_the_marked_product() {
    let mut rr1 = inv_pochhammer::<BigInt>(1, 5, Count::Infinite, 50).unwrap();
    rr1 = rr1.mul(&inv_pochhammer(4, 5, Count::Infinite, 50).unwrap()).unwrap();
    let lhs = find_series("rr1x").unwrap().lhs(&Params::with_m(9), 50).unwrap();
    assert_eq!(lhs, apply_marking(&rr1, 9).unwrap());
    assert_eq!(lhs.coeff(18, 2), BigInt::from(1));
}

#[test]
fn rejections_and_unknown_ids() {
    assert!(matches!(
        verify_series("rr1x", &Params::with_m(5), 40),
        Err(VerifyError::Hypothesis { .. })
    ));
    assert!(matches!(
        verify_series("rr1x", &Params::none(), 40),
        Err(VerifyError::MissingParam { .. })
    ));
    match verify_series("rr3", &Params::none(), 10) {
        Err(VerifyError::UnknownId { known, .. }) => assert!(known.contains(&"rr1x".to_string())),
        other => panic!("{other:?}"),
    }
    assert!(matches!(find_comb("rr1"), Err(VerifyError::NoCombinatorialPair(_))));
    assert!(matches!(
        verify_combinatorial("combthm2", &Params::with_m(4), 10),
        Err(VerifyError::Hypothesis { .. })
    ));
}

#[test]
fn agbig_table_profile() {
    let spec = find_series("agbig").unwrap();
    let p = Params::with_ka(3, 2).m(3);
    assert!(verify_series("agbig", &p, 40).unwrap().passed());
    let s = spec.lhs(&p, 40).unwrap();
    let profile: Vec<BigInt> = (0..4).map(|e| s.coeff(10, e)).collect();
    assert_eq!(profile, [10, 4, 2, 1].map(BigInt::from));
}

#[test]
fn qeuler_q2() {
    assert!(verify_series("qeuler", &Params::none().base(2), 40).unwrap().passed());
}

#[test]
fn marked_sides_are_nonnegative() {
    let marked = ["rr1x", "rr2x", "euler-marked", "gg1x", "gg2x", "agbig", "shift-rr", "shift23", "shift-euler"];
    for spec in registry().into_iter().filter(|s| marked.contains(&s.id)) {
        for p in &spec.sweep {
            let s = spec.rhs(p, 40).unwrap();
            assert!(s.is_nonnegative(), "{} {p}", spec.id);
            assert!(s.marker_degree_bounded(), "{} {p}", spec.id);
        }
    }
}

/// The product side counts partitions by multiplicity of `M`; both the
/// series and the statistic side must agree with a recursion oracle.
type Case<'a> = (&'a str, &'a str, usize, &'a dyn Fn(usize) -> bool, Params);

#[test]
fn cross_consistency() {
    let cases: [Case; 5] = [
        ("rr1x", "rrxcomb1", 6, &|p| [1, 4].contains(&(p % 5)), Params::with_m(6)),
        ("rr2x", "rrx2comb1", 7, &|p| [2, 3].contains(&(p % 5)), Params::with_m(7)),
        ("euler-marked", "combthm2", 3, &|p| p % 2 == 1, Params::with_m(3)),
        ("gg1x", "ggxcomb", 4, &|p| [1, 4, 7].contains(&(p % 8)), Params::with_m(4)),
        ("agbig", "agcombm", 3, &|p| ![0, 2, 7].contains(&(p % 9)), Params::with_ka(3, 2).m(3)),
    ];
    for (series_id, comb_id, m, ok, params) in cases {
        let lhs = find_series(series_id).unwrap().lhs(&params, 20).unwrap();
        let comb = find_comb(comb_id).unwrap();
        for n in 0..=20 {
            let (_, right) = comb.tallies(&params, n).unwrap();
            for k in 0..=n / m {
                let want = count_with(n, ok, m, k);
                assert_eq!(lhs.coeff(n, k), BigInt::from(want), "{series_id} n={n} k={k}");
                assert_eq!(right.get(&k).map_or(0, Vec::len), want, "{comb_id} n={n} k={k}");
            }
        }
    }
}

#[test]
fn shift_counts_match_substituted_series() {
    let (m, shift) = (4, 8);
    let params = Params::with_m(m).n_shift(shift);
    let lhs = find_series("shift-rr").unwrap().lhs(&params, 30).unwrap();
    let comb = find_comb("shiftcomb").unwrap();
    for n in 0..=30 {
        let (left, right) = comb.tallies(&params, n).unwrap();
        let want = BigInt::from(left.get(&0).map_or(0, Vec::len));
        assert_eq!(lhs.coeff(n, 0), want, "n={n}");
        assert_eq!(BigInt::from(right.get(&0).map_or(0, Vec::len)), want, "n={n}");
    }
    let rr1x = find_series("rr1x").unwrap().rhs(&Params::with_m(m), 30).unwrap();
    assert_eq!(rr1x.substitute_w(shift - m).unwrap(), lhs);
}

#[test]
fn tallies_depend_on_the_marked_part() {
    let comb = find_comb("rrxcomb1").unwrap();
    let sizes = |m: usize| -> Vec<(usize, usize)> {
        let (left, _) = comb.tallies(&Params::with_m(m), 12).unwrap();
        left.iter().map(|(k, v)| (*k, v.len())).collect()
    };
    assert_ne!(sizes(4), sizes(6));
    let r = verify_combinatorial("rrxcomb1", &Params::with_m(4), 20).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.witness.is_none());
}

#[test]
fn embedding_examples() {
    let a = ConstraintSet::residues(5, &[1, 4]).unwrap();
    let r = verify_marked_sum(&"6,4".parse().unwrap(), &a, 30).unwrap();
    assert!(r.passed(), "{r:?}");
    let l1 = embedding_table(&"6,1".parse().unwrap(), &a, 30).unwrap();
    let l2 = embedding_table(&"4,1,1,1".parse().unwrap(), &a, 30).unwrap();
    assert_eq!(l1, l2);
    let single = embedding_table(&"9".parse().unwrap(), &a, 30).unwrap();
    let lhs = find_series("rr1x").unwrap().lhs(&Params::with_m(9), 30).unwrap();
    assert_eq!(single, lhs);
}

#[test]
fn inequality_examples() {
    let p = |s: &str| -> Partition { s.parse().unwrap() };
    assert!(verify_inequality(3, &p("1,1,1"), &p("3"), 40).unwrap().passed());
    assert!(verify_inequality(7, &p("6,1"), &p("7"), 40).unwrap().passed());
    assert!(matches!(
        verify_inequality(2, &p("1,1"), &p("2"), 20),
        Err(VerifyError::Hypothesis { .. })
    ));
    assert!(verify_inequality(7, &p("7"), &p("7"), 20).is_err());
}

#[test]
fn series_sweeps_pass_at_small_cutoff() {
    for spec in registry() {
        for p in &spec.sweep {
            let r = verify_series(spec.id, p, 25).unwrap();
            if let Some(Witness::Coefficient { q_exp, w_exp, lhs, rhs }) = &r.witness {
                panic!("{} {p}: q^{q_exp} w^{w_exp} {lhs} != {rhs}", spec.id);
            }
            assert!(r.passed());
        }
    }
}

fn series_oracle_rr1(cutoff: usize) -> Series {
    let coeffs: Vec<i64> = (0..=cutoff)
        .map(|n| oracle(n, n, &|p| [1, 4].contains(&(p % 5))).len() as i64)
        .collect();
    Series::from_q_coeffs(&coeffs, cutoff).unwrap()
}

#[test]
fn rr1_matches_enumeration() {
    let rr1 = find_series("rr1").unwrap();
    assert_eq!(rr1.rhs(&Params::none(), 30).unwrap(), series_oracle_rr1(30));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rrxcomb1_counts_agree(i in 0usize..5, n in 0usize..26) {
        let m = [1, 4, 6, 9, 11][i];
        let comb = find_comb("rrxcomb1").unwrap();
        let (left, right) = comb.tallies(&Params::with_m(m), n).unwrap();
        let sizes = |t: &std::collections::BTreeMap<usize, Vec<Partition>>| {
            t.iter().map(|(k, v)| (*k, v.len())).collect::<Vec<_>>()
        };
        prop_assert_eq!(sizes(&left), sizes(&right));
    }

    #[test]
    fn embedding_table_at_one_counts_partitions(parts in proptest::collection::vec(0usize..4, 1..4)) {
        let a = ConstraintSet::residues(5, &[1, 4]).unwrap();
        let lambda = Partition::from_unsorted(parts.into_iter().map(|i| [1, 4, 6, 9][i]).collect()).unwrap();
        let t = embedding_table(&lambda, &a, 20).unwrap();
        let at_one = t.eval_w(&BigInt::from(1)).unwrap();
        prop_assert_eq!(at_one, series_oracle_rr1(20));
    }
}
