//! Integer partitions, constrained enumeration and the marking statistics.

mod constraint;
mod enumerate;
mod partition;
mod statistics;

pub use constraint::{ConstraintSet, GapRule, PartSet};
pub use enumerate::{count, enumerate, for_each};
pub use partition::Partition;
pub use statistics::{embed_count, mark_statistic, shift_statistic, staircase_remove, Staircase, StatisticId};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("{0}")]
    Constraint(String),
    #[error("{0}")]
    Statistic(String),
}
