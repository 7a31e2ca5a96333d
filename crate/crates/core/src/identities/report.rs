use serde::{Deserialize, Serialize};

use super::Params;
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Parameters violate the theorem's hypothesis; nothing was computed.
    Rejected,
}

/// Evidence attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// First differing coefficient of `q^q_exp w^w_exp`.
    Coefficient {
        q_exp: usize,
        w_exp: usize,
        lhs: String,
        rhs: String,
    },
    /// First `(n, k)` where the two sides count differently.
    Sets {
        n: usize,
        k: usize,
        left: Vec<Partition>,
        right: Vec<Partition>,
        only_left: Vec<Partition>,
        only_right: Vec<Partition>,
    },
    /// A negative coefficient where non-negativity was required.
    Negative { q_exp: usize, w_exp: usize, value: String },
    Hypothesis { hypothesis: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    pub status: Status,
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn rejected(id: &str, params: &Params, hypothesis: String) -> Self {
        Self {
            id: id.to_string(),
            params: params.clone(),
            cutoff: None,
            n_max: None,
            status: Status::Rejected,
            witness: Some(Witness::Hypothesis { hypothesis }),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }
}
