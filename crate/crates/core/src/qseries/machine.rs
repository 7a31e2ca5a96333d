//! JSON interchange form: `[[n, [[e, "coeff"], ...]], ...]`.
//!
//! Every `q`-exponent from 0 to the cutoff appears, so the cutoff survives a
//! round trip; zero coefficients carry an empty term list.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::coeff::{self, Coeff};
use super::{MarkerPolynomial, SeriesError, TruncatedSeries};

pub fn to_machine<C: Coeff>(s: &TruncatedSeries<C>) -> Value {
    let rows: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, p)| {
            let terms: Vec<Value> = p
                .terms()
                .map(|(e, c)| json!([e, coeff::to_big(c).to_string()]))
                .collect();
            json!([n, terms])
        })
        .collect();
    Value::Array(rows)
}

pub fn from_machine<C: Coeff>(v: &Value) -> Result<TruncatedSeries<C>, SeriesError> {
    let bad = |m: &str| SeriesError::Malformed(m.to_string());
    let rows = v.as_array().ok_or_else(|| bad("expected a list of rows"))?;
    let mut polys: Vec<MarkerPolynomial<C>> = Vec::new();
    for row in rows {
        let pair = row.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("row must be [n, terms]"))?;
        let n = pair[0].as_u64().ok_or_else(|| bad("q-exponent must be a non-negative integer"))? as usize;
        let terms = pair[1].as_array().ok_or_else(|| bad("terms must be a list"))?;
        let mut coeffs: Vec<C> = Vec::new();
        for t in terms {
            let t = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term must be [e, coeff]"))?;
            let e = t[0].as_u64().ok_or_else(|| bad("w-exponent must be a non-negative integer"))? as usize;
            let c: BigInt = match &t[1] {
                Value::String(s) => s.parse().map_err(|_| bad("coefficient is not a decimal integer"))?,
                Value::Number(x) => x.as_i64().map(BigInt::from).ok_or_else(|| bad("coefficient is not an integer"))?,
                _ => return Err(bad("coefficient must be a decimal string")),
            };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, C::zero());
            }
            coeffs[e] = coeff::add(&coeffs[e], &coeff::from_big(&c)?)?;
        }
        if polys.len() <= n {
            polys.resize(n + 1, MarkerPolynomial::zero());
        }
        polys[n] = polys[n].add(&MarkerPolynomial::from_coeffs(coeffs))?;
    }
    let cutoff = polys.len().saturating_sub(1);
    Ok(TruncatedSeries::from_coeffs(polys, cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut s = TruncatedSeries::<BigInt>::one(6);
        s.div_factor(3, 1).unwrap();
        s.div_factor(1, 0).unwrap();
        let v = to_machine(&s);
        // q^3: partitions of 3 into 1's and marked 3's give 1 + w
        assert_eq!(v[3], json!([3, [[0, "1"], [1, "1"]]]));
        assert_eq!(from_machine::<BigInt>(&v).unwrap(), s);
    }

    #[test]
    fn explicit_form() {
        let s = TruncatedSeries::<BigInt>::monomial(BigInt::from(-2), 1, 1, 2);
        assert_eq!(to_machine(&s), json!([[0, []], [1, [[1, "-2"]]], [2, []]]));
        assert!(from_machine::<BigInt>(&json!([[0]])).is_err());
    }
}
