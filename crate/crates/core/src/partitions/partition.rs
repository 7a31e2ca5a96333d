use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PartitionError;

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates that `parts` is positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing);
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// Caller guarantees the invariant.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `i`-th part, 1-based as in the usual notation; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|j| self.parts.get(j)).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    /// Part size to multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let Some(&first) = self.parts.first() else {
            return Self::empty();
        };
        let parts = (1..=first)
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count())
            .collect();
        Self { parts }
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Adds `count` copies of `size` (ignored when `size` is 0).
    pub fn with_parts(&self, size: usize, count: usize) -> Self {
        if size == 0 {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(size, count));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Removes every part equal to `size`.
    pub fn without_size(&self, size: usize) -> Self {
        Self {
            parts: self.parts.iter().copied().filter(|&p| p != size).collect(),
        }
    }

    /// Removes up to `count` copies of `size`.
    pub fn remove_parts(&self, size: usize, count: usize) -> Self {
        let mut left = count;
        let parts = self
            .parts
            .iter()
            .copied()
            .filter(|&p| {
                if p == size && left > 0 {
                    left -= 1;
                    false
                } else {
                    true
                }
            })
            .collect();
        Self { parts }
    }

    /// Multiplicity notation, e.g. `7^3,4,1^10`; the empty partition is `()`.
    pub fn to_multiplicity_string(&self) -> String {
        if self.is_empty() {
            return "()".into();
        }
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((size, m)) if *size == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        groups
            .iter()
            .map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `7,7,7,1^10`, optional surrounding parentheses and spaces.
    /// Parts may come in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let mut parts = Vec::new();
        if body.is_empty() {
            return Ok(Self::empty());
        }
        for tok in body.split(',') {
            let tok = tok.trim();
            let (size, mult) = match tok.split_once('^') {
                Some((a, b)) => (a.trim(), b.trim().parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let size: usize = size.parse().map_err(|_| bad())?;
            if size == 0 {
                return Err(PartitionError::ZeroPart);
            }
            parts.extend(std::iter::repeat_n(size, mult));
        }
        Self::from_unsorted(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(Partition::new(vec![3, 0]), Err(PartitionError::ZeroPart));
        assert_eq!(Partition::new(vec![1, 3]), Err(PartitionError::NotDecreasing));
        assert!(Partition::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn parse_and_render() {
        let q = p("7,7,7,1^10");
        assert_eq!(q.len(), 13);
        assert_eq!(q.weight(), 31);
        assert_eq!(q.to_multiplicity_string(), "7^3,1^10");
        assert_eq!(p("(8, 7, 7)").to_string(), "8,7,7");
        assert_eq!(p("1,3,2"), Partition::new(vec![3, 2, 1]).unwrap());
        assert_eq!(p("()"), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("4,4,1").conjugate(), p("3,2,2,2"));
        assert_eq!(p("5").conjugate(), p("1^5"));
    }

    #[test]
    fn multiset_ops() {
        let q = p("9,6^7,4^5,1^8");
        assert_eq!(q.multiplicity(6), 7);
        assert_eq!(q.remove_parts(6, 2).multiplicity(6), 5);
        assert_eq!(q.without_size(1).weight(), 9 + 42 + 20);
        assert_eq!(p("3,1").union(&p("2")), p("3,2,1"));
        assert_eq!(p("3").with_parts(5, 2), p("5,5,3"));
    }

    #[test]
    fn serde_as_array() {
        let q = p("5,5,1");
        assert_eq!(serde_json::to_string(&q).unwrap(), "[5,5,1]");
        assert!(serde_json::from_str::<Partition>("[1,5]").is_err());
    }
}
