//! Registry of the series identities and combinatorial theorems, the
//! verifiers that check them, and the reports they produce.

mod combinatorial;
mod params;
mod registry;
mod report;
mod special;
mod suite;
mod table;

pub use combinatorial::{comb_registry, find_comb, verify_combinatorial, witness_sets, CombSpec, Tally};
pub use params::Params;
pub use registry::{find_series, registry, verify_series, IdentitySpec};
pub use report::{Status, VerificationReport, Witness};
pub use special::{
    embedding_table, inequality_display, partitions_of_into, telescoping_sum, verify_inequality, verify_marked_sum,
};
pub use suite::{default_jobs, run_job, run_suite, suite_tsv, Job, JobKind};
pub use table::{ag_table, AgTable, TableRow};

use thiserror::Error;

use crate::durfee::DurfeeError;
use crate::partitions::PartitionError;
use crate::qseries::SeriesError;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown identity {id:?}; known ids: {}", .known.join(", "))]
    UnknownId { id: String, known: Vec<String> },
    #[error("{id} needs parameter --{name}")]
    MissingParam { id: String, name: String },
    #[error("{id}: hypothesis violated: {hypothesis}")]
    Hypothesis { id: String, hypothesis: String },
    #[error("{0} has no combinatorial pair")]
    NoCombinatorialPair(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Durfee(#[from] DurfeeError),
}
