use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ConstraintSet, GapRule, Partition, PartitionError};

/// Which staircase is removed before reading by columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Staircase {
    /// `(2k-1, 2k-3, ..., 1)`, giving `λ*`.
    Star,
    /// `(2k, 2k-2, ..., 2)`, giving `λ**`.
    DoubleStar,
    /// `(j, j-1, ..., 1)`, giving `λ^St`.
    St,
}

/// Conjugate of `λ` minus the staircase matching its number of parts.
pub fn staircase_remove(lambda: &Partition, kind: Staircase) -> Result<Partition, PartitionError> {
    let k = lambda.len();
    let mut rest = Vec::with_capacity(k);
    for (i, &p) in lambda.parts().iter().enumerate() {
        let step = match kind {
            Staircase::Star => 2 * (k - i) - 1,
            Staircase::DoubleStar => 2 * (k - i),
            Staircase::St => k - i,
        };
        let d = p.checked_sub(step).ok_or_else(|| {
            PartitionError::Constraint(format!("{lambda} does not contain the {kind:?} staircase"))
        })?;
        rest.push(d);
    }
    if rest.windows(2).any(|w| w[0] < w[1]) {
        return Err(PartitionError::Constraint(format!(
            "{lambda} minus the {kind:?} staircase is not a partition"
        )));
    }
    rest.retain(|&d| d > 0);
    Ok(Partition::from_sorted_unchecked(rest).conjugate())
}

/// Number of disjoint copies of `lambda` inside `mu` as sub-multisets.
pub fn embed_count(lambda: &Partition, mu: &Partition) -> Result<usize, PartitionError> {
    if lambda.is_empty() {
        return Err(PartitionError::Statistic("embedding count needs a non-empty partition".into()));
    }
    Ok(lambda
        .multiplicities()
        .iter()
        .map(|(&size, &m)| mu.multiplicity(size) / m)
        .min()
        .unwrap_or(0))
}

/// The statistics attached to the combinatorial theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StatisticId {
    Rr1Mark,
    Rr2Mark,
    Rr1Star,
    Rr2Star,
    EulerMark,
    EulerSt,
    Gg1Mark,
    Gg2Mark,
    ShiftRr,
    Shift23,
    ShiftEuler,
    AgMark,
    Embed,
}

impl StatisticId {
    pub const ALL: [StatisticId; 13] = [
        StatisticId::Rr1Mark,
        StatisticId::Rr2Mark,
        StatisticId::Rr1Star,
        StatisticId::Rr2Star,
        StatisticId::EulerMark,
        StatisticId::EulerSt,
        StatisticId::Gg1Mark,
        StatisticId::Gg2Mark,
        StatisticId::ShiftRr,
        StatisticId::Shift23,
        StatisticId::ShiftEuler,
        StatisticId::AgMark,
        StatisticId::Embed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatisticId::Rr1Mark => "RR1_MARK",
            StatisticId::Rr2Mark => "RR2_MARK",
            StatisticId::Rr1Star => "RR1_STAR",
            StatisticId::Rr2Star => "RR2_STAR",
            StatisticId::EulerMark => "EULER_MARK",
            StatisticId::EulerSt => "EULER_ST",
            StatisticId::Gg1Mark => "GG1_MARK",
            StatisticId::Gg2Mark => "GG2_MARK",
            StatisticId::ShiftRr => "SHIFT_RR",
            StatisticId::Shift23 => "SHIFT23",
            StatisticId::ShiftEuler => "SHIFT_EULER",
            StatisticId::AgMark => "AG_MARK",
            StatisticId::Embed => "EMBED",
        }
    }

    /// The family of partitions on which the statistic is defined. `AG_MARK`
    /// and `EMBED` are not restricted here; admissibility and the part set
    /// live with their own checks.
    pub fn constraint(self) -> ConstraintSet {
        use StatisticId::*;
        match self {
            Rr1Mark | Rr1Star | ShiftRr | Shift23 => ConstraintSet::with_gap_rule(GapRule::Gap2),
            Rr2Mark | Rr2Star => ConstraintSet::with_gap_rule(GapRule::Gap2).min_part(2),
            EulerMark | EulerSt | ShiftEuler => ConstraintSet::with_gap_rule(GapRule::Distinct),
            Gg1Mark => ConstraintSet::with_gap_rule(GapRule::Gap2Even3),
            Gg2Mark => ConstraintSet::with_gap_rule(GapRule::Gap2Even3).min_part(3),
            AgMark | Embed => ConstraintSet::all(),
        }
    }
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatisticId {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase().replace('-', "_");
        StatisticId::ALL
            .into_iter()
            .find(|id| id.name() == up)
            .ok_or_else(|| PartitionError::Statistic(format!("unknown statistic {s:?}")))
    }
}

fn check_member(id: StatisticId, lambda: &Partition) -> Result<(), PartitionError> {
    if id.constraint().satisfies(lambda) {
        Ok(())
    } else {
        Err(PartitionError::Constraint(format!("{lambda} is outside the domain of {id}")))
    }
}

/// `floor(n/M)` unless `n mod M` is one of `shifted`, in which case the
/// permitted offsets force `j = M + r` and hence one fewer copy of `M`.
fn single_part(n: usize, m: usize, shifted: &[usize]) -> usize {
    let k = n / m;
    if shifted.contains(&(n % m)) {
        k - 1
    } else {
        k
    }
}

/// `floor((λ1 - λ2 - offset)/M)`.
fn difference(lambda: &Partition, offset: usize, m: usize) -> usize {
    (lambda.part(1) - lambda.part(2) - offset) / m
}

/// Value `k` of the theorem statistic `id` on `lambda` for marked part `m`.
pub fn mark_statistic(id: StatisticId, lambda: &Partition, m: usize) -> Result<usize, PartitionError> {
    use StatisticId::*;
    if m == 0 {
        return Err(PartitionError::Statistic("M must be positive".into()));
    }
    check_member(id, lambda)?;
    if lambda.is_empty() {
        return Ok(0);
    }
    let n = lambda.weight();
    let parts = lambda.len();
    let k = match id {
        Rr1Mark => match parts {
            1 => n / m,
            _ => difference(lambda, 2, m),
        },
        Rr2Mark => match parts {
            1 => single_part(n, m, &[1]),
            _ => difference(lambda, 2, m),
        },
        EulerMark => match parts {
            1 => n / m,
            _ => difference(lambda, 1, m),
        },
        Gg1Mark | Gg2Mark => match parts {
            1 if id == Gg1Mark => n / m,
            1 => single_part(n, m, &[1, 2]),
            _ if lambda.part(2).is_multiple_of(2) => difference(lambda, 3, m),
            _ => difference(lambda, 2, m),
        },
        Rr1Star | Rr2Star | EulerSt => {
            let (offset, kind) = match id {
                Rr1Star => (2, Staircase::Star),
                Rr2Star => (2, Staircase::DoubleStar),
                _ => (1, Staircase::St),
            };
            if parts == 1 {
                if id == Rr2Star {
                    single_part(n, m, &[1])
                } else {
                    n / m
                }
            } else if parts < m {
                difference(lambda, offset, m)
            } else {
                staircase_remove(lambda, kind)?.multiplicity(m)
            }
        }
        ShiftRr | Shift23 | ShiftEuler | AgMark | Embed => {
            return Err(PartitionError::Statistic(format!(
                "{id} is not a multiplicity statistic"
            )))
        }
    };
    Ok(k)
}

/// Membership test for the shifted theorems. `m` and `n_shift` are the
/// residue window `[0, m)` and modulus; `SHIFT23` ignores both.
pub fn shift_statistic(id: StatisticId, lambda: &Partition, m: usize, n_shift: usize) -> Result<bool, PartitionError> {
    use StatisticId::*;
    check_member(id, lambda)?;
    if lambda.is_empty() {
        return Ok(true);
    }
    let offset = match id {
        ShiftRr | Shift23 => 2,
        ShiftEuler => 1,
        _ => return Err(PartitionError::Statistic(format!("{id} is not a shift statistic"))),
    };
    let value = if lambda.len() == 1 {
        lambda.weight()
    } else {
        lambda.part(1) - lambda.part(2) - offset
    };
    if id == Shift23 {
        return Ok(value % 3 != 1);
    }
    if n_shift == 0 {
        return Err(PartitionError::Statistic("shift modulus must be positive".into()));
    }
    Ok(value % n_shift < m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase_remove(&p("8,7,3,1"), Staircase::St).unwrap(), p("3,2,2,2"));
        assert_eq!(staircase_remove(&p("9,7,5,3"), Staircase::Star).unwrap(), p("4,4"));
        assert_eq!(staircase_remove(&p("7,5,3,1"), Staircase::Star).unwrap(), Partition::empty());
        assert_eq!(staircase_remove(&p("8,6,4,2"), Staircase::DoubleStar).unwrap(), Partition::empty());
        assert!(staircase_remove(&p("4,3"), Staircase::Star).is_err());
        assert!(staircase_remove(&p("1"), Staircase::DoubleStar).is_err());
    }

    #[test]
    fn embedding() {
        assert_eq!(embed_count(&p("6,4,4,1"), &p("9,6^7,4^5,1^8")).unwrap(), 2);
        assert_eq!(embed_count(&p("6,1"), &p("6,6,4,1")).unwrap(), 1);
        assert_eq!(embed_count(&p("6,4"), &p("6,6,4,4,4,4")).unwrap(), 2);
        assert_eq!(embed_count(&p("3,2"), &p("3,2")).unwrap(), 1);
        assert!(embed_count(&Partition::empty(), &p("1")).is_err());
    }

    #[test]
    fn worked_values() {
        use StatisticId::*;
        assert_eq!(mark_statistic(Rr2Mark, &p("22"), 7).unwrap(), 2);
        assert_eq!(mark_statistic(Rr2Mark, &p("20,2"), 7).unwrap(), 2);
        assert_eq!(mark_statistic(Rr1Mark, &p("18,5,1"), 4).unwrap(), 2);
        assert_eq!(mark_statistic(Gg1Mark, &p("30,1"), 7).unwrap(), 3);
        assert_eq!(mark_statistic(Gg1Mark, &p("27,4"), 7).unwrap(), 2);
        assert_eq!(mark_statistic(EulerMark, &p("16,2"), 5).unwrap(), 2);
        assert_eq!(mark_statistic(Rr1Star, &p("9,7,5,3"), 4).unwrap(), 2);
        assert_eq!(mark_statistic(EulerSt, &p("7,6,4,1"), 3).unwrap(), 2);
        assert_eq!(mark_statistic(Rr1Mark, &Partition::empty(), 3).unwrap(), 0);
    }

    #[test]
    fn single_part_representations() {
        use StatisticId::*;
        // 15 = 7*2 + 1 is not permitted; 15 = 7*1 + 8 is
        assert_eq!(mark_statistic(Rr2Mark, &p("15"), 7).unwrap(), 1);
        assert_eq!(mark_statistic(Rr2Mark, &p("3"), 2).unwrap(), 0);
        assert_eq!(mark_statistic(Gg2Mark, &p("23"), 11).unwrap(), 1);
        assert_eq!(mark_statistic(Gg2Mark, &p("24"), 11).unwrap(), 1);
        assert_eq!(mark_statistic(Gg2Mark, &p("25"), 11).unwrap(), 2);
    }

    #[test]
    fn domain_errors() {
        use StatisticId::*;
        assert!(mark_statistic(Rr1Mark, &p("4,3"), 4).is_err());
        assert!(mark_statistic(Rr2Mark, &p("5,1"), 3).is_err());
        assert!(mark_statistic(EulerMark, &p("2,2"), 3).is_err());
        assert!(mark_statistic(ShiftRr, &p("2"), 3).is_err());
    }

    #[test]
    fn shifted_membership() {
        use StatisticId::*;
        assert!(shift_statistic(ShiftRr, &p("6,3"), 4, 8).unwrap());
        assert!(!shift_statistic(Shift23, &p("13"), 0, 0).unwrap());
        assert!(shift_statistic(ShiftEuler, &p("5,4"), 3, 8).unwrap());
        assert!(!shift_statistic(ShiftRr, &p("8,1"), 4, 8).unwrap());
    }

    #[test]
    fn names_round_trip() {
        for id in StatisticId::ALL {
            assert_eq!(id.name().parse::<StatisticId>().unwrap(), id);
        }
        assert!("nope".parse::<StatisticId>().is_err());
    }
}
