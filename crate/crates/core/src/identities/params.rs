use std::fmt;

use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::partitions::Partition;

/// Named integer parameters of an identity, plus the fixed partitions used by
/// the embedding theorems.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n_shift: Option<usize>,
    /// Integer value of `q` in the `q`-analogue of Euler's theorem.
    #[serde(rename = "q", skip_serializing_if = "Option::is_none")]
    pub base: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<Partition>,
}

impl Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_m(m: usize) -> Self {
        Self { m: Some(m), ..Self::default() }
    }

    pub fn with_ka(k: usize, a: usize) -> Self {
        Self { k: Some(k), a: Some(a), ..Self::default() }
    }

    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn n_shift(mut self, n: usize) -> Self {
        self.n_shift = Some(n);
        self
    }

    pub fn base(mut self, q: usize) -> Self {
        self.base = Some(q);
        self
    }

    pub fn lambda(mut self, l: Partition) -> Self {
        self.lambda = Some(l);
        self
    }

    pub fn theta(mut self, t: Partition) -> Self {
        self.theta = Some(t);
        self
    }

    pub(crate) fn get(&self, id: &str, name: &str) -> Result<usize, VerifyError> {
        let v = match name {
            "M" => self.m,
            "k" => self.k,
            "a" => self.a,
            "N" => self.n_shift,
            "q" => self.base,
            _ => None,
        };
        v.ok_or_else(|| VerifyError::MissingParam {
            id: id.to_string(),
            name: name.to_string(),
        })
    }

    pub(crate) fn partition(&self, id: &str, name: &str) -> Result<&Partition, VerifyError> {
        let v = match name {
            "lambda" => self.lambda.as_ref(),
            "theta" => self.theta.as_ref(),
            _ => None,
        };
        v.ok_or_else(|| VerifyError::MissingParam {
            id: id.to_string(),
            name: name.to_string(),
        })
    }
}

impl fmt::Display for Params {
    /// `M=4,N=8`; no parameters renders as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        for (name, v) in [("M", self.m), ("k", self.k), ("a", self.a), ("N", self.n_shift), ("q", self.base)] {
            if let Some(v) = v {
                items.push(format!("{name}={v}"));
            }
        }
        if let Some(l) = &self.lambda {
            items.push(format!("lambda={}", l.to_multiplicity_string()));
        }
        if let Some(t) = &self.theta {
            items.push(format!("theta={}", t.to_multiplicity_string()));
        }
        if items.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", items.join(","))
        }
    }
}
