use super::{ConstraintSet, Partition};

/// Calls `visit` on every partition of `n` in `c`, in reverse-lexicographic
/// order.
pub fn for_each(n: usize, c: &ConstraintSet, mut visit: impl FnMut(&Partition)) {
    let mut parts = Vec::new();
    walk(n, n, c, &mut parts, &mut visit);
}

fn walk(rest: usize, max: usize, c: &ConstraintSet, parts: &mut Vec<usize>, visit: &mut dyn FnMut(&Partition)) {
    if rest == 0 {
        visit(&Partition::from_sorted_unchecked(parts.clone()));
        return;
    }
    if c.part_limit().is_some_and(|m| parts.len() >= m) {
        return;
    }
    let lo = c.smallest_part();
    let mut p = max.min(rest);
    while p >= lo {
        let fits = parts.last().is_none_or(|&prev| c.gap_rule().admits(prev, p));
        if fits && c.allows_part(p) {
            parts.push(p);
            walk(rest - p, c.gap_rule().next_max(p), c, parts, visit);
            parts.pop();
        }
        p -= 1;
    }
}

/// All partitions of `n` in `c`, reverse-lexicographic.
pub fn enumerate(n: usize, c: &ConstraintSet) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each(n, c, |p| out.push(p.clone()));
    out
}

pub fn count(n: usize, c: &ConstraintSet) -> usize {
    let mut k = 0;
    for_each(n, c, |_| k += 1);
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::GapRule;

    fn ps(list: &[&str]) -> Vec<Partition> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn empty_partition_of_zero() {
        assert_eq!(enumerate(0, &ConstraintSet::all()), vec![Partition::empty()]);
        assert_eq!(enumerate(0, &ConstraintSet::with_gap_rule(GapRule::Gap2).min_part(5)).len(), 1);
    }

    #[test]
    fn reverse_lex_order() {
        assert_eq!(
            enumerate(4, &ConstraintSet::all()),
            ps(&["4", "3,1", "2,2", "2,1,1", "1,1,1,1"])
        );
    }

    #[test]
    fn partition_numbers() {
        let p: Vec<usize> = (0..=12).map(|n| count(n, &ConstraintSet::all())).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn shifted_parts_example() {
        let c = ConstraintSet::residues(5, &[1, 4]).unwrap().exclude(1).exclude(4).include(2).include(3);
        assert_eq!(
            enumerate(13, &c),
            ps(&["11,2", "9,2,2", "6,3,2,2", "3,3,3,2,2", "3,2,2,2,2,2"])
        );
    }

    #[test]
    fn max_parts_and_gaps() {
        let c = ConstraintSet::with_gap_rule(GapRule::Distinct).max_parts(2);
        assert_eq!(enumerate(6, &c), ps(&["6", "5,1", "4,2"]));
        let rr = ConstraintSet::with_gap_rule(GapRule::Gap2);
        assert_eq!(enumerate(9, &rr), ps(&["9", "8,1", "7,2", "6,3", "5,3,1"]));
    }
}
