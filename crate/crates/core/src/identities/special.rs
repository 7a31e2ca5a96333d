use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{Params, Status, VerificationReport, VerifyError, Witness};
use crate::partitions::{embed_count, enumerate, ConstraintSet, Partition, PartitionError};
use crate::qseries::{apply_marking, marked_product, qint_base, MarkerPolynomial, SeriesError};
use crate::Series;

/// Partitions of `total` whose parts lie in `c`.
pub fn partitions_of_into(total: usize, c: &ConstraintSet) -> Vec<Partition> {
    enumerate(total, c)
}

fn check_parts(id: &str, lambda: &Partition, c: &ConstraintSet, name: &str) -> Result<(), VerifyError> {
    if lambda.is_empty() {
        return Err(VerifyError::Hypothesis {
            id: id.to_string(),
            hypothesis: format!("{name} must be non-empty"),
        });
    }
    if let Some(p) = lambda.parts().iter().find(|&&p| !c.allows_part(p)) {
        return Err(VerifyError::Hypothesis {
            id: id.to_string(),
            hypothesis: format!("{name}={lambda} has part {p} outside the part set"),
        });
    }
    Ok(())
}

/// `sum_mu q^|mu| w^{E_lambda(mu)}` over partitions `mu` with parts in `a`,
/// by enumeration.
pub fn embedding_table(lambda: &Partition, a: &ConstraintSet, n_max: usize) -> Result<Series, VerifyError> {
    let rows: Vec<MarkerPolynomial<BigInt>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut counts: Vec<i64> = Vec::new();
            for mu in enumerate(n, a) {
                let k = embed_count(lambda, &mu)?;
                if counts.len() <= k {
                    counts.resize(k + 1, 0);
                }
                counts[k] += 1;
            }
            Ok(MarkerPolynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
        })
        .collect::<Result<_, PartitionError>>()?;
    Ok(Series::from_coeffs(rows, n_max))
}

/// The telescoped form of `(1 - q^M) prod_i 1/(1 - q^{B_i})` over the
/// distinct parts `B_i` of `lambda`, one summand per part size.
pub fn telescoping_sum(lambda: &Partition, cutoff: usize) -> Result<Series, SeriesError> {
    let mults: Vec<(usize, usize)> = lambda.multiplicities().into_iter().collect();
    let mut total = Series::zero(cutoff);
    let mut prefix = 0;
    for (i, &(b, m)) in mults.iter().enumerate() {
        let mut term = qint_base::<BigInt>(m, b, cutoff);
        for (j, &(bj, _)) in mults.iter().enumerate() {
            if j != i {
                term.div_factor(bj, 0)?;
            }
        }
        total.add_assign(&term.shift_q(prefix))?;
        prefix += m * b;
    }
    Ok(total)
}

fn product_of(a: &ConstraintSet, cutoff: usize) -> Result<Series, SeriesError> {
    let spec = a
        .product_spec(cutoff)
        .ok_or_else(|| SeriesError::InvalidParameter("part set is not multiplicative".into()))?;
    marked_product(&spec, cutoff)
}

fn coefficient_witness(lhs: &Series, rhs: &Series) -> Option<Witness> {
    lhs.first_difference(rhs).map(|(q_exp, w_exp)| Witness::Coefficient {
        q_exp,
        w_exp,
        lhs: lhs.coeff(q_exp, w_exp).to_string(),
        rhs: rhs.coeff(q_exp, w_exp).to_string(),
    })
}

fn report(id: &str, params: Params, cutoff: usize, witness: Option<Witness>, notes: Vec<String>, start: Instant) -> VerificationReport {
    VerificationReport {
        id: id.to_string(),
        params,
        cutoff: Some(cutoff),
        n_max: None,
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
        notes,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Checks that `(1 - q^M)/(1 - w q^M) prod_{A in a} 1/(1 - q^A)` counts
/// partitions with parts in `a` by `E_lambda`, and that the telescoped sum
/// counts those with `E_lambda = 0` among partitions into the parts of
/// `lambda`.
pub fn verify_marked_sum(lambda: &Partition, a: &ConstraintSet, cutoff: usize) -> Result<VerificationReport, VerifyError> {
    const ID: &str = "marked-sum";
    if !a.is_multiplicative() {
        return Err(VerifyError::Hypothesis {
            id: ID.into(),
            hypothesis: "part set must be decided part by part".into(),
        });
    }
    check_parts(ID, lambda, a, "lambda")?;
    let start = Instant::now();
    let m = lambda.weight();
    let params = Params::none().lambda(lambda.clone()).m(m);
    let mut notes = Vec::new();

    let lhs = apply_marking(&product_of(a, cutoff)?, m)?;
    let table = embedding_table(lambda, a, cutoff)?;
    if let Some(w) = coefficient_witness(&lhs, &table) {
        notes.push("product side differs from the embedding count".into());
        return Ok(report(ID, params, cutoff, Some(w), notes, start));
    }

    let parts: Vec<usize> = lambda.multiplicities().into_keys().collect();
    let tele = telescoping_sum(lambda, cutoff)?;
    let mut closed = Series::one(cutoff);
    closed.mul_factor(m, 0)?;
    for &b in &parts {
        closed.div_factor(b, 0)?;
    }
    if let Some(w) = coefficient_witness(&tele, &closed) {
        notes.push("telescoped sum differs from its closed form".into());
        return Ok(report(ID, params, cutoff, Some(w), notes, start));
    }
    let sub = embedding_table(lambda, &ConstraintSet::only(&parts), cutoff)?;
    let slice = Series::from_coeffs(
        sub.coeffs().iter().map(|p| MarkerPolynomial::constant(p.coeff(0))).collect(),
        cutoff,
    );
    if let Some(w) = coefficient_witness(&tele, &slice) {
        notes.push("telescoped sum differs from the E = 0 count".into());
        return Ok(report(ID, params, cutoff, Some(w), notes, start));
    }
    notes.push("telescoped sum matches the E = 0 slice".into());
    Ok(report(ID, params, cutoff, None, notes, start))
}

/// `(q - q^{M+1})/(1 - w q^M)
///   + sum_{k>=2} q^{k^2} [M]_q/(1 - w q^M) / (q^2;q)_{k-shorten}`.
fn display_with(m: usize, shorten: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut first = Series::q_power(1, cutoff);
    first.sub_assign(&Series::q_power(m + 1, cutoff))?;
    first.div_factor(m, 1)?;

    let mut tail = Series::zero(cutoff);
    let mut inv = Series::one(cutoff);
    let mut built = 0;
    for k in 2.. {
        if k * k > cutoff {
            break;
        }
        while built < k - shorten {
            built += 1;
            inv.div_factor(built + 1, 0)?;
        }
        tail.add_assign(&inv.shift_q(k * k))?;
    }
    let mut tail = tail.mul(&qint_base(m, 1, cutoff))?;
    tail.div_factor(m, 1)?;
    first.add(&tail)
}

/// The displayed closed form of `sum (E_lambda^A - E_theta^B) q^n w^k`
/// for parts `A = {1,4 mod 5}`, `B = {2,3 mod 5}`.
pub fn inequality_display(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    display_with(m, 2, cutoff)
}

fn first_negative(s: &Series) -> Option<Witness> {
    s.coeffs().iter().enumerate().find_map(|(n, p)| {
        p.terms().find(|(_, c)| c.sign() == num_bigint::Sign::Minus).map(|(e, c)| Witness::Negative {
            q_exp: n,
            w_exp: e,
            value: c.to_string(),
        })
    })
}

/// Checks `E_theta^B(n,k) <= E_lambda^A(n,k)` through `n_max` and the closed
/// form of the difference.
pub fn verify_inequality(
    m: usize,
    lambda: &Partition,
    theta: &Partition,
    n_max: usize,
) -> Result<VerificationReport, VerifyError> {
    const ID: &str = "inequality";
    if m < 3 {
        return Err(VerifyError::Hypothesis {
            id: ID.into(),
            hypothesis: format!("M={m} must be at least 3"),
        });
    }
    let a_set = ConstraintSet::residues(5, &[1, 4])?;
    let b_set = ConstraintSet::residues(5, &[2, 3])?;
    check_parts(ID, lambda, &a_set, "lambda")?;
    check_parts(ID, theta, &b_set, "theta")?;
    for (name, p) in [("lambda", lambda), ("theta", theta)] {
        if p.weight() != m {
            return Err(VerifyError::Hypothesis {
                id: ID.into(),
                hypothesis: format!("{name}={p} must be a partition of M={m}"),
            });
        }
    }
    let start = Instant::now();
    let params = Params::with_m(m).lambda(lambda.clone()).theta(theta.clone());
    let mut notes = Vec::new();

    let ea = embedding_table(lambda, &a_set, n_max)?;
    let eb = embedding_table(theta, &b_set, n_max)?;
    for (table, set, name) in [(&ea, &a_set, "lambda"), (&eb, &b_set, "theta")] {
        let analytic = apply_marking(&product_of(set, n_max)?, m)?;
        if let Some(w) = coefficient_witness(&analytic, table) {
            notes.push(format!("E-table for {name} differs from its product form"));
            return Ok(report(ID, params, n_max, Some(w), notes, start));
        }
    }
    let diff = ea.sub(&eb)?;
    if let Some(w) = first_negative(&diff) {
        notes.push("difference has a negative coefficient".into());
        return Ok(report(ID, params, n_max, Some(w), notes, start));
    }
    let display = inequality_display(m, n_max)?;
    match coefficient_witness(&diff, &display) {
        None => notes.push("difference matches the displayed closed form".into()),
        Some(w) => {
            if coefficient_witness(&diff, &display_with(m, 1, n_max)?).is_some() {
                notes.push("difference matches neither reading of the displayed closed form".into());
                return Ok(report(ID, params, n_max, Some(w), notes, start));
            }
            notes.push(
                "displayed closed form fails with (q^2;q)_{k-2}; (q^2;q)_{k-1} matches, possible typo".into(),
            );
        }
    }
    Ok(report(ID, params, n_max, None, notes, start))
}
