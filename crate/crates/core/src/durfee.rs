//! Durfee dissections, `(k+1, k+1-a)`-admissibility, and the marking
//! statistic for the Andrews-Gordon identities.
//!
//! Blocks are placed top-down. The first `k - a` blocks are `n × n` squares and
//! the rest are `(n+1) × n` rectangles whose last row must be exactly `n`
//! long. Squares are taken maximal (the row after a square is no longer than
//! its side), which makes the dissection of a partition unique; the relaxed
//! search without that condition is kept for comparison.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::Partition;
use crate::qseries::{ag_part_allowed, gauss_binom, inv_pochhammer, Count, SeriesError, TruncatedSeries};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DurfeeError {
    #[error("Andrews-Gordon parameters need k >= 1 and 0 <= a <= k, got k={k}, a={a}")]
    Parameters { k: usize, a: usize },
    #[error("M={m} must not be congruent to 0 or +-{t} modulo {modulus}")]
    Marker { m: usize, t: usize, modulus: usize },
    #[error("{lambda} is not ({}, {})-admissible", .k + 1, .k + 1 - .a)]
    NotAdmissible { lambda: Partition, k: usize, a: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Block widths of a dissection, squares first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dissection {
    pub square_widths: Vec<usize>,
    pub rect_widths: Vec<usize>,
}

impl Dissection {
    /// Number of blocks `r`.
    pub fn blocks(&self) -> usize {
        self.square_widths.len() + self.rect_widths.len()
    }

    /// `n_1, ..., n_r`.
    pub fn widths(&self) -> Vec<usize> {
        self.square_widths.iter().chain(&self.rect_widths).copied().collect()
    }

    /// Rows covered: squares contribute `n`, rectangles `n + 1`.
    pub fn rows(&self) -> usize {
        self.square_widths.iter().sum::<usize>() + self.rect_widths.iter().map(|n| n + 1).sum::<usize>()
    }
}

impl fmt::Display for Dissection {
    /// `[2:sq, 1:rect]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: Vec<String> = self
            .square_widths
            .iter()
            .map(|n| format!("{n}:sq"))
            .chain(self.rect_widths.iter().map(|n| format!("{n}:rect")))
            .collect();
        write!(f, "[{}]", tags.join(", "))
    }
}

fn check_params(k: usize, a: usize) -> Result<(), DurfeeError> {
    if k == 0 || a > k {
        return Err(DurfeeError::Parameters { k, a });
    }
    Ok(())
}

fn search(
    lambda: &Partition,
    squares: usize,
    max_blocks: usize,
    maximal: bool,
    start: usize,
    widths: &mut Vec<usize>,
    out: &mut Vec<Dissection>,
) {
    let rows = lambda.len();
    if start == rows {
        let split = widths.len().min(squares);
        out.push(Dissection {
            square_widths: widths[..split].to_vec(),
            rect_widths: widths[split..].to_vec(),
        });
        return;
    }
    if widths.len() == max_blocks {
        return;
    }
    let square = widths.len() < squares;
    let prev = widths.last().copied().unwrap_or(usize::MAX);
    for n in 1..=prev.min(rows - start) {
        let height = if square { n } else { n + 1 };
        if start + height > rows || lambda.part(start + height) < n {
            continue;
        }
        if !square && lambda.part(start + height) != n {
            continue;
        }
        if square && maximal && lambda.part(start + n + 1) > n {
            continue;
        }
        widths.push(n);
        search(lambda, squares, max_blocks, maximal, start + height, widths, out);
        widths.pop();
    }
}

/// Every dissection of `λ` into at most `k` blocks, the first `k - a` square.
pub fn find_dissections(lambda: &Partition, k: usize, a: usize) -> Vec<Dissection> {
    let mut out = Vec::new();
    if check_params(k, a).is_ok() {
        search(lambda, k - a, k, true, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// As [`find_dissections`] but without requiring squares to be maximal.
pub fn find_relaxed_dissections(lambda: &Partition, k: usize, a: usize) -> Vec<Dissection> {
    let mut out = Vec::new();
    if check_params(k, a).is_ok() {
        search(lambda, k - a, k, false, 0, &mut Vec::new(), &mut out);
    }
    out
}

pub fn is_admissible(lambda: &Partition, k: usize, a: usize) -> bool {
    !find_dissections(lambda, k, a).is_empty()
}

/// The dissection used for the statistic: fewest blocks, then
/// lexicographically largest widths.
pub fn canonical_dissection(lambda: &Partition, k: usize, a: usize) -> Option<Dissection> {
    let mut all = find_dissections(lambda, k, a);
    all.sort_by(|x, y| x.blocks().cmp(&y.blocks()).then_with(|| y.widths().cmp(&x.widths())));
    all.into_iter().next()
}

/// The marking value `j` of an admissible partition.
pub fn ag_statistic(lambda: &Partition, m: usize, k: usize, a: usize) -> Result<usize, DurfeeError> {
    check_params(k, a)?;
    if !ag_part_allowed(k, a, m) {
        return Err(DurfeeError::Marker {
            m,
            t: k + 1 - a,
            modulus: 2 * k + 3,
        });
    }
    let d = canonical_dissection(lambda, k, a).ok_or_else(|| DurfeeError::NotAdmissible {
        lambda: lambda.clone(),
        k,
        a,
    })?;
    if lambda.is_empty() {
        return Ok(0);
    }
    let n1 = d.widths()[0];
    let n = lambda.weight();
    let j = match (d.blocks(), n1) {
        (1, 1) if a < k => n / m,
        // λ = (λ1, 1): sizes Mj, Mj+2, ..., Mj+M-1, Mj+M+1
        (1, 1) => {
            if n % m == 1 {
                n / m - 1
            } else {
                n / m
            }
        }
        (_, 1) => (lambda.part(1) - n1) / m,
        _ => (lambda.part(1) - lambda.part(2)) / m,
    };
    Ok(j)
}

/// Generating function of the partitions whose dissection has the given
/// widths: `q^{Σ n_j^2 + Σ_rect n_j} / (q)_{n_1} · Π [n_j, n_{j+1}]_q`.
pub fn dissection_generating_function(
    d: &Dissection,
    cutoff: usize,
) -> Result<TruncatedSeries<BigInt>, DurfeeError> {
    let widths = d.widths();
    let exp: usize = widths.iter().map(|n| n * n).sum::<usize>() + d.rect_widths.iter().sum::<usize>();
    let mut s = TruncatedSeries::q_power(exp, cutoff);
    if let Some(&n1) = widths.first() {
        s = s.mul(&inv_pochhammer(1, 1, Count::Finite(n1), cutoff)?)?;
    }
    for w in widths.windows(2) {
        s = s.mul(&gauss_binom(w[0], w[1], cutoff)?)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            find_dissections(&Partition::empty(), 3, 2),
            vec![Dissection { square_widths: vec![], rect_widths: vec![] }]
        );
        assert!(!is_admissible(&p("9,1"), 3, 2));
        let d = find_dissections(&p("8,1,1"), 3, 2);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].widths(), vec![1, 1]);
        assert_eq!(d[0].to_string(), "[1:sq, 1:rect]");
        assert_eq!(d[0].rows(), 3);
    }

    #[test]
    fn table_values() {
        assert_eq!(ag_statistic(&p("10"), 3, 3, 2).unwrap(), 3);
        assert_eq!(ag_statistic(&p("8,2"), 3, 3, 2).unwrap(), 2);
        assert_eq!(ag_statistic(&p("6,1,1,1,1"), 3, 3, 2).unwrap(), 1);
        assert!(matches!(ag_statistic(&p("9,1"), 3, 3, 2), Err(DurfeeError::NotAdmissible { .. })));
        assert!(matches!(ag_statistic(&p("10"), 7, 3, 2), Err(DurfeeError::Marker { .. })));
    }

    #[test]
    fn relaxed_search_admits_extra_squares() {
        // (2,2) also fits a 1x1 square followed by a second 1x1 square
        assert_eq!(find_dissections(&p("2,2"), 2, 0).len(), 1);
        assert_eq!(find_relaxed_dissections(&p("2,2"), 2, 0).len(), 2);
    }
}
