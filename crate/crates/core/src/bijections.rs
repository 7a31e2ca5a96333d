//! Sylvester's fishhook bijection between distinct-part and odd-part
//! partitions, and the variant `FH^M` that tracks parts of size `M`.
//!
//! The fishhook used here goes through Frobenius coordinates. For an odd
//! partition `μ` put `R_i = (μ_i + 1)/2` and `L_i = R_i - 1`; the image of `μ`
//! under the inverse map interleaves the diagonal hook lengths of `R` and `L`.
//! With this convention `FH(n) = 1^n` and `FH(λ)` has `λ1 - λ2 - 1` ones
//! whenever `λ` has at least two parts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("{0} does not have distinct parts")]
    NotDistinct(Partition),
    #[error("{0} has an even part")]
    NotOdd(Partition),
    #[error("M must be a positive odd integer, got {0}")]
    BadMarker(usize),
}

/// One recorded stage of a bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// Frobenius coordinates `(a | b)` of the half-partition `R`.
    Frobenius { arms: Vec<usize>, legs: Vec<usize> },
    /// `R` rebuilt from its Frobenius coordinates.
    HalfPartition { r: Partition },
    /// Single part: `n = kM + j`.
    SinglePart { k: usize, ones: usize },
    /// `θ` is `λ` with its first part reduced by `kM`.
    Reduce { k: usize, theta: Partition },
    /// `γ = FH(θ)`.
    Fishhook { gamma: Partition },
    /// Every `M` of `γ` replaced by `M` ones.
    Convert { r: usize, gamma_prime: Partition },
    /// `k` parts of size `M` adjoined.
    Adjoin { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionTrace {
    pub map: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub input: Partition,
    pub output: Partition,
    pub steps: Vec<TraceStep>,
}

fn check_distinct(lambda: &Partition) -> Result<(), BijectionError> {
    if lambda.is_distinct() {
        Ok(())
    } else {
        Err(BijectionError::NotDistinct(lambda.clone()))
    }
}

fn check_odd(mu: &Partition) -> Result<(), BijectionError> {
    if mu.parts().iter().all(|p| p % 2 == 1) {
        Ok(())
    } else {
        Err(BijectionError::NotOdd(mu.clone()))
    }
}

fn check_marker(m: usize) -> Result<(), BijectionError> {
    if m % 2 == 1 {
        Ok(())
    } else {
        Err(BijectionError::BadMarker(m))
    }
}

/// Diagonal hook lengths `(ν_t - t) + (ν'_t - t) + 1`.
fn diagonal_hooks(nu: &Partition) -> Vec<usize> {
    let conj = nu.conjugate();
    (1..)
        .take_while(|&t| nu.part(t) >= t)
        .map(|t| nu.part(t) + conj.part(t) + 1 - 2 * t)
        .collect()
}

fn fishhook_traced(lambda: &Partition, steps: &mut Vec<TraceStep>) -> Partition {
    let parts = lambda.parts();
    let s = parts.len();
    if s == 0 {
        return Partition::empty();
    }
    let d = s.div_ceil(2);
    // λ_{2t-1} = a_t + b_t + 1 and λ_{2t} = a_t + b_{t+1} + 1, with
    // b_{d+1} = -1 when s is even and a_d = 0 when s is odd.
    let at = |i: usize| parts[i - 1] as i64;
    let mut a = vec![0i64; d + 1];
    let mut b = vec![0i64; d + 2];
    if s.is_multiple_of(2) {
        a[d] = at(2 * d);
    }
    b[d] = at(2 * d - 1) - 1 - a[d];
    for t in (1..d).rev() {
        a[t] = a[t + 1] + at(2 * t) - at(2 * t + 1);
        b[t] = b[t + 1] + at(2 * t - 1) - at(2 * t);
    }
    let arms: Vec<usize> = a[1..=d].iter().map(|&x| x as usize).collect();
    let legs: Vec<usize> = b[1..=d].iter().map(|&x| x as usize).collect();
    let mut r: Vec<usize> = (1..=d).map(|t| arms[t - 1] + t).collect();
    let rows = legs[0] + 1;
    for i in d + 1..=rows {
        r.push((1..=d).filter(|&t| legs[t - 1] + t >= i).count());
    }
    let r = Partition::from_sorted_unchecked(r);
    steps.push(TraceStep::Frobenius { arms, legs });
    steps.push(TraceStep::HalfPartition { r: r.clone() });
    Partition::from_sorted_unchecked(r.parts().iter().map(|&x| 2 * x - 1).collect())
}

/// `FH`: distinct parts to odd parts.
pub fn fishhook(lambda: &Partition) -> Result<Partition, BijectionError> {
    check_distinct(lambda)?;
    Ok(fishhook_traced(lambda, &mut Vec::new()))
}

/// `FH` with its Frobenius intermediate states.
pub fn fishhook_trace(lambda: &Partition) -> Result<BijectionTrace, BijectionError> {
    check_distinct(lambda)?;
    let mut steps = Vec::new();
    let output = fishhook_traced(lambda, &mut steps);
    Ok(BijectionTrace {
        map: "fh".into(),
        m: None,
        input: lambda.clone(),
        output,
        steps,
    })
}

/// `FH^{-1}`: odd parts to distinct parts.
pub fn fishhook_inverse(mu: &Partition) -> Result<Partition, BijectionError> {
    check_odd(mu)?;
    let r: Vec<usize> = mu.parts().iter().map(|&p| p.div_ceil(2)).collect();
    let l: Vec<usize> = r.iter().map(|&x| x - 1).filter(|&x| x > 0).collect();
    let hr = diagonal_hooks(&Partition::from_sorted_unchecked(r));
    let hl = diagonal_hooks(&Partition::from_sorted_unchecked(l));
    let mut out = Vec::with_capacity(hr.len() + hl.len());
    for (t, &h) in hr.iter().enumerate() {
        out.push(h);
        if let Some(&g) = hl.get(t) {
            out.push(g);
        }
    }
    Partition::new(out).map_err(|_| BijectionError::NotOdd(mu.clone()))
}

fn fishhook_m_traced(lambda: &Partition, m: usize, steps: &mut Vec<TraceStep>) -> Partition {
    if lambda.is_empty() {
        return Partition::empty();
    }
    if lambda.len() == 1 {
        let n = lambda.weight();
        let k = n / m;
        steps.push(TraceStep::SinglePart { k, ones: n - k * m });
        return Partition::empty().with_parts(m, k).with_parts(1, n - k * m);
    }
    let k = (lambda.part(1) - lambda.part(2) - 1) / m;
    let mut theta = lambda.parts().to_vec();
    theta[0] -= k * m;
    let theta = Partition::from_sorted_unchecked(theta);
    assert!(theta.is_distinct(), "reduced partition {theta} lost distinctness");
    steps.push(TraceStep::Reduce { k, theta: theta.clone() });
    let gamma = fishhook_traced(&theta, &mut Vec::new());
    steps.push(TraceStep::Fishhook { gamma: gamma.clone() });
    let r = gamma.multiplicity(m);
    let base = if r == 0 {
        gamma
    } else {
        let g = gamma.without_size(m).with_parts(1, r * m);
        steps.push(TraceStep::Convert { r, gamma_prime: g.clone() });
        g
    };
    steps.push(TraceStep::Adjoin { k });
    base.with_parts(m, k)
}

/// `FH^M` for odd `M`; the image has exactly as many parts `M` as the
/// Euler marking statistic of `λ`.
pub fn fishhook_m(lambda: &Partition, m: usize) -> Result<Partition, BijectionError> {
    check_distinct(lambda)?;
    check_marker(m)?;
    Ok(fishhook_m_traced(lambda, m, &mut Vec::new()))
}

pub fn fishhook_m_trace(lambda: &Partition, m: usize) -> Result<BijectionTrace, BijectionError> {
    check_distinct(lambda)?;
    check_marker(m)?;
    let mut steps = Vec::new();
    let output = fishhook_m_traced(lambda, m, &mut steps);
    Ok(BijectionTrace {
        map: "fhm".into(),
        m: Some(m),
        input: lambda.clone(),
        output,
        steps,
    })
}

/// Inverse of [`fishhook_m`].
pub fn fishhook_m_inverse(mu: &Partition, m: usize) -> Result<Partition, BijectionError> {
    check_odd(mu)?;
    check_marker(m)?;
    let k = mu.multiplicity(m);
    let rho = mu.without_size(m);
    let ones = rho.multiplicity(1);
    if ones == rho.len() && ones < m {
        // single part n = kM + j, or the empty partition
        let n = k * m + ones;
        return Ok(if n == 0 {
            Partition::empty()
        } else {
            Partition::from_sorted_unchecked(vec![n])
        });
    }
    let gamma = if ones >= m {
        let r = ones / m;
        rho.remove_parts(1, r * m).with_parts(m, r)
    } else {
        rho
    };
    let theta = fishhook_inverse(&gamma)?;
    let mut parts = theta.parts().to_vec();
    parts[0] += k * m;
    Ok(Partition::from_sorted_unchecked(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(fishhook(&p("7")).unwrap(), p("1^7"));
        assert_eq!(fishhook(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(fishhook(&p("3,2")).unwrap(), p("5"));
        assert_eq!(fishhook(&p("3,1")).unwrap(), p("3,1"));
        assert_eq!(fishhook_inverse(&p("1^7")).unwrap(), p("7"));
        assert!(fishhook(&p("2,2")).is_err());
        assert!(fishhook_inverse(&p("2")).is_err());
    }

    #[test]
    fn marked_single_part() {
        assert_eq!(fishhook_m(&p("18"), 5).unwrap(), p("5,5,5,1,1,1"));
        assert_eq!(fishhook_m_inverse(&p("5,5,5,1,1,1"), 5).unwrap(), p("18"));
        assert_eq!(fishhook_m_inverse(&p("1^4"), 7).unwrap(), p("4"));
        assert!(fishhook_m(&p("4"), 2).is_err());
    }

    #[test]
    fn trace_serializes() {
        let t = fishhook_m_trace(&p("16,2"), 5).unwrap();
        assert_eq!(t.output.multiplicity(5), 2);
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["steps"][0]["step"], "reduce");
        assert!(fishhook_trace(&p("4,3,1")).unwrap().steps.len() == 2);
    }
}
