use rayon::prelude::*;
use serde::Serialize;

use super::{
    comb_registry, partitions_of_into, registry, verify_combinatorial, verify_inequality, verify_marked_sum,
    verify_series, Params, VerificationReport, VerifyError, Witness,
};
use crate::partitions::{ConstraintSet, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JobKind {
    Series { cutoff: usize },
    Combinatorial { n_max: usize },
    /// Part set is the residues `residues` modulo `modulus`.
    MarkedSum { modulus: usize, residues: Vec<usize>, cutoff: usize },
    Inequality { n_max: usize },
}

/// One verification task keyed by identity id and parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Job {
    pub id: String,
    pub params: Params,
    pub kind: JobKind,
}

const INEQUALITY_N_MAX: usize = 60;
const MARKED_SUM_CUTOFF: usize = 40;

fn inequality_pairs(m: usize) -> Vec<(Partition, Partition)> {
    let a = ConstraintSet::residues(5, &[1, 4]).expect("static residues");
    let b = ConstraintSet::residues(5, &[2, 3]).expect("static residues");
    let lambdas = partitions_of_into(m, &a);
    let thetas = partitions_of_into(m, &b);
    let mut pairs: Vec<(Partition, Partition)> = lambdas
        .iter()
        .zip(thetas.iter())
        .map(|(l, t)| (l.clone(), t.clone()))
        .collect();
    let extra = lambdas
        .iter()
        .flat_map(|l| thetas.iter().map(move |t| (l.clone(), t.clone())))
        .find(|p| !pairs.contains(p));
    pairs.extend(extra);
    pairs.truncate(2);
    pairs
}

/// Every registered check at its default limits. `n_max` and `cutoff`
/// override the per-identity defaults when given.
pub fn default_jobs(n_max: Option<usize>, cutoff: Option<usize>) -> Vec<Job> {
    let mut jobs = Vec::new();
    for spec in registry() {
        for p in &spec.sweep {
            jobs.push(Job {
                id: spec.id.to_string(),
                params: p.clone(),
                kind: JobKind::Series {
                    cutoff: cutoff.unwrap_or(spec.default_cutoff),
                },
            });
        }
    }
    for spec in comb_registry() {
        for p in &spec.sweep {
            jobs.push(Job {
                id: spec.id.to_string(),
                params: p.clone(),
                kind: JobKind::Combinatorial {
                    n_max: n_max.unwrap_or(spec.default_n_max),
                },
            });
        }
    }
    for (parts, modulus, residues) in [
        ("6,4", 5, vec![1, 4]),
        ("6,1", 5, vec![1, 4]),
        ("4,1,1,1", 5, vec![1, 4]),
        ("7,3,2", 5, vec![2, 3]),
        ("5,3,3,1", 2, vec![1]),
    ] {
        jobs.push(Job {
            id: "marked-sum".into(),
            params: Params::none().lambda(parts.parse().expect("static partition")),
            kind: JobKind::MarkedSum {
                modulus,
                residues,
                cutoff: cutoff.unwrap_or(MARKED_SUM_CUTOFF),
            },
        });
    }
    for m in 3..=12 {
        for (l, t) in inequality_pairs(m) {
            jobs.push(Job {
                id: "inequality".into(),
                params: Params::with_m(m).lambda(l).theta(t),
                kind: JobKind::Inequality {
                    n_max: n_max.unwrap_or(INEQUALITY_N_MAX),
                },
            });
        }
    }
    jobs
}

/// Runs one job. Hypothesis violations become `REJECTED` reports.
pub fn run_job(job: &Job) -> Result<VerificationReport, VerifyError> {
    let p = &job.params;
    let result = match &job.kind {
        JobKind::Series { cutoff } => verify_series(&job.id, p, *cutoff),
        JobKind::Combinatorial { n_max } => verify_combinatorial(&job.id, p, *n_max),
        JobKind::MarkedSum {
            modulus,
            residues,
            cutoff,
        } => {
            let lambda = p.partition(&job.id, "lambda")?;
            verify_marked_sum(lambda, &ConstraintSet::residues(*modulus, residues)?, *cutoff)
        }
        JobKind::Inequality { n_max } => {
            let m = p.get(&job.id, "M")?;
            verify_inequality(m, p.partition(&job.id, "lambda")?, p.partition(&job.id, "theta")?, *n_max)
        }
    };
    match result {
        Err(VerifyError::Hypothesis { hypothesis, .. }) => Ok(VerificationReport::rejected(&job.id, p, hypothesis)),
        other => other,
    }
}

/// Runs jobs concurrently; reports come back in job order.
pub fn run_suite(jobs: &[Job]) -> Result<Vec<VerificationReport>, VerifyError> {
    jobs.par_iter().map(run_job).collect()
}

fn witness_summary(w: &Option<Witness>) -> String {
    match w {
        None => "-".into(),
        Some(Witness::Coefficient { q_exp, w_exp, lhs, rhs }) => {
            format!("q^{q_exp} w^{w_exp}: {lhs} vs {rhs}")
        }
        Some(Witness::Sets { n, k, left, right, .. }) => {
            format!("n={n} k={k}: {} vs {}", left.len(), right.len())
        }
        Some(Witness::Negative { q_exp, w_exp, value }) => format!("q^{q_exp} w^{w_exp} = {value}"),
        Some(Witness::Hypothesis { hypothesis }) => hypothesis.clone(),
    }
}

/// Tab-separated summary, one line per report after a header.
pub fn suite_tsv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("id\tparams\tlimit\tstatus\telapsed_ms\twitness\n");
    for r in reports {
        let limit = r.cutoff.or(r.n_max).map_or_else(|| "-".into(), |x| x.to_string());
        let status = serde_json::to_value(r.status).expect("status serializes");
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.id,
            r.params,
            limit,
            status.as_str().unwrap_or("?"),
            r.elapsed_ms,
            witness_summary(&r.witness)
        ));
    }
    out
}
