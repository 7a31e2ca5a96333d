use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{find_comb, Params, VerifyError};
use crate::partitions::Partition;

/// One printed row: a product-side partition with its count of `M`'s beside an
/// admissible partition with its `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub left: Option<Partition>,
    pub marks: Option<usize>,
    pub right: Option<Partition>,
    pub j: Option<usize>,
}

/// Both columns of the Andrews-Gordon refinement at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgTable {
    pub k: usize,
    pub a: usize,
    pub m: usize,
    pub n: usize,
    pub rows: Vec<TableRow>,
    pub left_distribution: BTreeMap<usize, usize>,
    pub right_distribution: BTreeMap<usize, usize>,
}

impl AgTable {
    pub fn distributions_agree(&self) -> bool {
        self.left_distribution == self.right_distribution
    }
}

fn column(tally: BTreeMap<usize, Vec<Partition>>) -> Vec<(Partition, usize)> {
    let mut col: Vec<(Partition, usize)> = tally
        .into_iter()
        .flat_map(|(k, ps)| ps.into_iter().map(move |p| (p, k)))
        .collect();
    col.sort_by(|x, y| y.0.parts().cmp(x.0.parts()));
    col
}

/// Lists partitions of `n` on both sides of the marked Andrews-Gordon theorem,
/// each column in reverse-lexicographic order.
pub fn ag_table(k: usize, a: usize, m: usize, n: usize) -> Result<AgTable, VerifyError> {
    let spec = find_comb("agcombm")?;
    let (left, right) = spec.tallies(&Params::with_ka(k, a).m(m), n)?;
    let dist = |t: &BTreeMap<usize, Vec<Partition>>| t.iter().map(|(&j, v)| (j, v.len())).collect();
    let left_distribution = dist(&left);
    let right_distribution = dist(&right);
    let (left, right) = (column(left), column(right));
    let rows = (0..left.len().max(right.len()))
        .map(|i| TableRow {
            left: left.get(i).map(|x| x.0.clone()),
            marks: left.get(i).map(|x| x.1),
            right: right.get(i).map(|x| x.0.clone()),
            j: right.get(i).map(|x| x.1),
        })
        .collect();
    Ok(AgTable {
        k,
        a,
        m,
        n,
        rows,
        left_distribution,
        right_distribution,
    })
}

fn cell<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

impl fmt::Display for AgTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "partition\t#{}'s\tadmissible\tj", self.m)?;
        for r in &self.rows {
            let part = |p: &Option<Partition>| p.as_ref().map_or_else(|| "-".into(), Partition::to_multiplicity_string);
            writeln!(f, "{}\t{}\t{}\t{}", part(&r.left), cell(&r.marks), part(&r.right), cell(&r.j))?;
        }
        let show = |d: &BTreeMap<usize, usize>| {
            d.iter().map(|(j, c)| format!("{j}:{c}")).collect::<Vec<_>>().join(", ")
        };
        writeln!(f, "left: {}", show(&self.left_distribution))?;
        write!(f, "right: {}", show(&self.right_distribution))
    }
}
