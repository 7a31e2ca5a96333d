use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Partition, PartitionError};
use crate::qseries::ProductSpec;

/// Which part sizes a family admits before explicit include/exclude lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartSet {
    All,
    Residues { modulus: usize, residues: BTreeSet<usize> },
    Only(BTreeSet<usize>),
}

impl PartSet {
    fn contains(&self, p: usize) -> bool {
        match self {
            PartSet::All => true,
            PartSet::Residues { modulus, residues } => residues.contains(&(p % modulus)),
            PartSet::Only(set) => set.contains(&p),
        }
    }
}

/// Difference condition between consecutive parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GapRule {
    None,
    /// Strictly decreasing.
    Distinct,
    /// `λ_i - λ_{i+1} >= 2`.
    Gap2,
    /// `Gap2`, and `>= 3` between consecutive even parts.
    Gap2Even3,
}

impl GapRule {
    /// Largest part allowed directly below `prev`.
    pub(crate) fn next_max(self, prev: usize) -> usize {
        match self {
            GapRule::None => prev,
            GapRule::Distinct => prev.saturating_sub(1),
            GapRule::Gap2 | GapRule::Gap2Even3 => prev.saturating_sub(2),
        }
    }

    pub(crate) fn admits(self, upper: usize, lower: usize) -> bool {
        match self {
            GapRule::None => upper >= lower,
            GapRule::Distinct => upper > lower,
            GapRule::Gap2 => upper >= lower + 2,
            GapRule::Gap2Even3 => {
                let gap = if upper.is_multiple_of(2) && lower.is_multiple_of(2) { 3 } else { 2 };
                upper >= lower + gap
            }
        }
    }
}

/// A declarative partition family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSet {
    base: PartSet,
    include: BTreeSet<usize>,
    exclude: BTreeSet<usize>,
    min_part: usize,
    gap: GapRule,
    max_parts: Option<usize>,
}

impl Default for ConstraintSet {
    fn default() -> Self {
        Self::all()
    }
}

impl ConstraintSet {
    /// Every partition.
    pub fn all() -> Self {
        Self {
            base: PartSet::All,
            include: BTreeSet::new(),
            exclude: BTreeSet::new(),
            min_part: 1,
            gap: GapRule::None,
            max_parts: None,
        }
    }

    /// Parts whose residue modulo `modulus` lies in `residues`.
    pub fn residues(modulus: usize, residues: &[usize]) -> Result<Self, PartitionError> {
        if modulus == 0 || residues.iter().any(|&r| r >= modulus) {
            return Err(PartitionError::Constraint(format!(
                "residues {residues:?} must lie in [0, {modulus})"
            )));
        }
        Ok(Self {
            base: PartSet::Residues {
                modulus,
                residues: residues.iter().copied().collect(),
            },
            ..Self::all()
        })
    }

    /// Parts from an explicit finite list only.
    pub fn only(parts: &[usize]) -> Self {
        Self {
            base: PartSet::Only(parts.iter().copied().collect()),
            ..Self::all()
        }
    }

    /// Every part with the given difference condition.
    pub fn with_gap_rule(gap: GapRule) -> Self {
        Self { gap, ..Self::all() }
    }

    pub fn include(mut self, part: usize) -> Self {
        self.exclude.remove(&part);
        self.include.insert(part);
        self
    }

    pub fn exclude(mut self, part: usize) -> Self {
        self.include.remove(&part);
        self.exclude.insert(part);
        self
    }

    pub fn min_part(mut self, m: usize) -> Self {
        self.min_part = m.max(1);
        self
    }

    pub fn gap(mut self, gap: GapRule) -> Self {
        self.gap = gap;
        self
    }

    pub fn max_parts(mut self, n: usize) -> Self {
        self.max_parts = Some(n);
        self
    }

    pub fn gap_rule(&self) -> GapRule {
        self.gap
    }

    pub fn smallest_part(&self) -> usize {
        self.min_part
    }

    pub fn part_limit(&self) -> Option<usize> {
        self.max_parts
    }

    /// Whether a single part size is admitted.
    pub fn allows_part(&self, p: usize) -> bool {
        p >= self.min_part && !self.exclude.contains(&p) && (self.include.contains(&p) || self.base.contains(p))
    }

    pub fn satisfies(&self, lambda: &Partition) -> bool {
        let parts = lambda.parts();
        parts.iter().all(|&p| self.allows_part(p))
            && parts.windows(2).all(|w| self.gap.admits(w[0], w[1]))
            && self.max_parts.is_none_or(|m| parts.len() <= m)
    }

    /// True when membership is decided part by part, so the family has an
    /// infinite-product generating function.
    pub fn is_multiplicative(&self) -> bool {
        self.gap == GapRule::None && self.max_parts.is_none()
    }

    /// Product generating function of a multiplicative family through `cutoff`.
    pub fn product_spec(&self, cutoff: usize) -> Option<ProductSpec> {
        self.is_multiplicative()
            .then(|| ProductSpec::from_predicate(|p| self.allows_part(p), cutoff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_validation() {
        assert!(ConstraintSet::residues(5, &[1, 5]).is_err());
        assert!(ConstraintSet::residues(0, &[]).is_err());
    }

    #[test]
    fn membership() {
        let c = ConstraintSet::residues(5, &[1, 4]).unwrap().exclude(1).include(2);
        assert!(!c.allows_part(1));
        assert!(c.allows_part(2));
        assert!(c.allows_part(4));
        assert!(!c.allows_part(3));
        let gg = ConstraintSet::with_gap_rule(GapRule::Gap2Even3);
        assert!(gg.satisfies(&"27,3,1".parse().unwrap()));
        assert!(!gg.satisfies(&"6,4".parse().unwrap()));
        assert!(gg.satisfies(&"7,4".parse().unwrap()));
        assert!(!gg.satisfies(&"5,4".parse().unwrap()));
    }
}
