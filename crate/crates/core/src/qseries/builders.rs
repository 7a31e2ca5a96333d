//! Constructors for every analytic expression the identity registry needs.
//!
//! Infinite products and sums are truncated by `q`-order: a factor or summand
//! is skipped exactly when its lowest `q`-exponent exceeds the cutoff. Each
//! builder states the order bound it relies on.

use super::coeff::{self, Coeff};
use super::{MarkerPolynomial, SeriesError, TruncatedSeries};

/// Length of a `q`-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    /// Every factor whose exponent does not exceed the cutoff.
    Infinite,
}

impl Count {
    fn limit(self, a: usize, d: usize, cutoff: usize) -> usize {
        match self {
            Count::Finite(n) => n,
            Count::Infinite => {
                if a > cutoff {
                    0
                } else {
                    (cutoff - a) / d + 1
                }
            }
        }
    }
}

/// `[m]_{q^d} = 1 + q^d + ... + q^{d(m-1)}`; `m = 0` gives the zero series.
pub fn qint_base<C: Coeff>(m: usize, d: usize, cutoff: usize) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(cutoff);
    for i in 0..m {
        let e = d * i;
        if e > cutoff {
            break;
        }
        s.add_assign(&TruncatedSeries::q_power(e, cutoff)).expect("unit coefficients");
    }
    s
}

/// The `q`-integer `[m]_q = (1 - q^m)/(1 - q)`.
pub fn qint<C: Coeff>(m: usize, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    if m < 1 {
        return Err(SeriesError::InvalidParameter(format!("[M]_q needs M >= 1, got {m}")));
    }
    Ok(qint_base(m, 1, cutoff))
}

/// `(q^a; q^d)_count = prod_{j < count} (1 - q^{a + j d})`.
///
/// With `a = 0` and at least one factor the product vanishes.
pub fn pochhammer<C: Coeff>(a: usize, d: usize, count: Count, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    signed_pochhammer(&C::one(), a, d, count, cutoff)
}

/// `(-q^a; q^d)_count = prod_{j < count} (1 + q^{a + j d})`.
pub fn pochhammer_plus<C: Coeff>(a: usize, d: usize, count: Count, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    signed_pochhammer(&coeff::neg(&C::one())?, a, d, count, cutoff)
}

fn signed_pochhammer<C: Coeff>(
    c: &C,
    a: usize,
    d: usize,
    count: Count,
    cutoff: usize,
) -> Result<TruncatedSeries<C>, SeriesError> {
    check_step(d)?;
    let n = count.limit(a, d, cutoff);
    let mut s = TruncatedSeries::one(cutoff);
    if n == 0 {
        return Ok(s);
    }
    if a == 0 {
        // leading factor is 1 - c
        let lead = coeff::sub(&C::one(), c)?;
        s = s.scale(&lead)?;
    }
    for j in 0..n {
        let e = a + j * d;
        if e == 0 {
            continue;
        }
        if e > cutoff {
            break;
        }
        s.mul_binomial(c, e, 0)?;
    }
    Ok(s)
}

/// `1 / (q^a; q^d)_count`, requiring `a >= 1`.
pub fn inv_pochhammer<C: Coeff>(a: usize, d: usize, count: Count, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    check_step(d)?;
    if a == 0 {
        return Err(SeriesError::NonUnit);
    }
    let n = count.limit(a, d, cutoff);
    let mut s = TruncatedSeries::one(cutoff);
    for j in 0..n {
        let e = a + j * d;
        if e > cutoff {
            break;
        }
        s.div_factor(e, 0)?;
    }
    Ok(s)
}

fn check_step(d: usize) -> Result<(), SeriesError> {
    if d == 0 {
        return Err(SeriesError::InvalidParameter("Pochhammer step must be >= 1".into()));
    }
    Ok(())
}

/// Gaussian binomial coefficient `[n choose k]_q`, as a truncated polynomial.
pub fn gauss_binom<C: Coeff>(n: usize, k: usize, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    if k > n {
        return Err(SeriesError::InvalidParameter(format!(
            "Gaussian binomial needs k <= n, got n={n}, k={k}"
        )));
    }
    // Pascal row by row: [m, j] = [m-1, j-1] + q^j [m-1, j]
    let mut row: Vec<TruncatedSeries<C>> = vec![TruncatedSeries::one(cutoff)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let mut t = if j == 0 {
                TruncatedSeries::zero(cutoff)
            } else {
                row[j - 1].clone()
            };
            if j < row.len() && j < m {
                t.add_assign(&row[j].shift_q(j))?;
            }
            next.push(t);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// One factor `1/(1 - w^marker q^part)` of an infinite product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub part: usize,
    pub marker: usize,
}

/// A product of factors `1/(1 - w^e q^m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, part: usize, marker: usize) -> Result<(), SeriesError> {
        if part == 0 {
            return Err(SeriesError::InvalidParameter("product factor with part size 0".into()));
        }
        self.factors.push(Factor { part, marker });
        Ok(())
    }

    /// Unmarked factors for the given part sizes.
    pub fn from_parts<I: IntoIterator<Item = usize>>(parts: I) -> Result<Self, SeriesError> {
        let mut spec = Self::new();
        for p in parts {
            spec.push(p, 0)?;
        }
        Ok(spec)
    }

    /// Unmarked factors for every allowed part up to the cutoff; parts above it
    /// are the identity modulo `q^(cutoff+1)`.
    pub fn from_predicate(allowed: impl Fn(usize) -> bool, cutoff: usize) -> Self {
        Self {
            factors: (1..=cutoff)
                .filter(|&m| allowed(m))
                .map(|part| Factor { part, marker: 0 })
                .collect(),
        }
    }

    /// Marks every factor of part size `m` with one power of `w`.
    pub fn mark(mut self, m: usize) -> Self {
        for f in &mut self.factors {
            if f.part == m {
                f.marker = 1;
            }
        }
        self
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }
}

/// Expands a [`ProductSpec`] as a truncated series.
pub fn marked_product<C: Coeff>(spec: &ProductSpec, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    let mut s = TruncatedSeries::one(cutoff);
    for f in spec.factors() {
        if f.part <= cutoff {
            s.div_factor(f.part, f.marker)?;
        }
    }
    Ok(s)
}

/// `sum_j alpha_j / (q^d; q^d)_j`.
pub fn basic_sum<C: Coeff>(alpha: &[TruncatedSeries<C>], d: usize, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    let mut total = TruncatedSeries::zero(cutoff);
    let mut inv = TruncatedSeries::one(cutoff);
    for (j, a) in alpha.iter().enumerate() {
        if j > 0 && d * j <= cutoff {
            inv.div_factor(d * j, 0)?;
        }
        if a.is_zero() {
            continue;
        }
        total.add_assign(&a.mul(&inv)?)?;
    }
    Ok(total)
}

/// `(1 - q^{dM}) / (1 - w q^{dM})` times `series`.
pub fn apply_marking<C: Coeff>(series: &TruncatedSeries<C>, part: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    let mut s = series.clone();
    s.mul_factor(part, 0)?;
    s.div_factor(part, 1)?;
    Ok(s)
}

fn check_alpha<C: Coeff>(alpha: &[TruncatedSeries<C>]) -> Result<(), SeriesError> {
    match alpha.first() {
        Some(a0) if a0.coeffs()[0].is_one() && a0.coeffs()[1..].iter().all(MarkerPolynomial::is_zero) => Ok(()),
        _ => Err(SeriesError::InvalidParameter("alpha_0 must be the constant series 1".into())),
    }
}

/// Marked expansion of `sum_j alpha_j/(q;q)_j` with part `m` marked:
///
/// `1 + (alpha_1 [M]_q - q^M + w q^M)/(1 - w q^M)
///    + sum_{j>=2} [M]_q/(1 - w q^M) * alpha_j/(q^2;q)_{j-1}`.
///
/// Terms beyond `alpha.len()` are taken as zero; callers supply every `j`
/// whose summand has `q`-order at most the cutoff.
pub fn marked_expansion<C: Coeff>(alpha: &[TruncatedSeries<C>], m: usize, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    marked_expansion_base(alpha, m, 1, cutoff)
}

/// [`marked_expansion`] with `q` replaced by `q^d` in the denominators and the
/// marked factor (the marked part size is `d * m`).
pub fn marked_expansion_base<C: Coeff>(
    alpha: &[TruncatedSeries<C>],
    m: usize,
    d: usize,
    cutoff: usize,
) -> Result<TruncatedSeries<C>, SeriesError> {
    check_alpha(alpha)?;
    if m < 1 {
        return Err(SeriesError::InvalidParameter("marked part must be >= 1".into()));
    }
    check_step(d)?;
    let part = d * m;
    let bracket = qint_base::<C>(m, d, cutoff);

    // numerator = alpha_1 [M] - q^{part} + w q^{part} + [M] * sum_{j>=2} alpha_j/(q^{2d};q^d)_{j-1}
    let mut numerator = match alpha.get(1) {
        Some(a1) => a1.mul(&bracket)?,
        None => TruncatedSeries::zero(cutoff),
    };
    numerator.sub_assign(&TruncatedSeries::q_power(part, cutoff))?;
    numerator.add_assign(&TruncatedSeries::monomial(C::one(), part, 1, cutoff))?;

    let mut tail = TruncatedSeries::zero(cutoff);
    let mut inv = TruncatedSeries::one(cutoff);
    for (j, a) in alpha.iter().enumerate().skip(2) {
        // (q^{2d}; q^d)_{j-1} gains the factor 1 - q^{d j}
        if d * j <= cutoff {
            inv.div_factor(d * j, 0)?;
        }
        if a.is_zero() {
            continue;
        }
        tail.add_assign(&a.mul(&inv)?)?;
    }
    numerator.add_assign(&tail.mul(&bracket)?)?;
    numerator.div_factor(part, 1)?;
    numerator.add_assign(&TruncatedSeries::one(cutoff))?;
    Ok(numerator)
}

/// Sum over `n_1 >= ... >= n_r >= min_last` (and `n_1 >= min_first`) of
///
/// `q^{n_1^2 + ... + n_r^2 + n_{lin_from} + ... + n_r}
///   / ((q)_{n_1-n_2} ... (q)_{n_{r-1}-n_r} * last(n_r))`
///
/// where `last(n)` is `(q)_n` or `(q^2;q)_{n-1}`. Summands with
/// `n_1^2 > cutoff` vanish, which bounds the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum LastFactor {
    Full,
    DropFirst,
}

pub(crate) fn multisum<C: Coeff>(
    r: usize,
    lin_from: usize,
    min_first: usize,
    min_last: usize,
    last: LastFactor,
    cutoff: usize,
) -> Result<TruncatedSeries<C>, SeriesError> {
    let inv_qq: Vec<TruncatedSeries<C>> = {
        let mut v = Vec::with_capacity(cutoff + 1);
        let mut cur = TruncatedSeries::one(cutoff);
        v.push(cur.clone());
        for m in 1..=cutoff {
            cur.div_factor(m, 0)?;
            v.push(cur.clone());
        }
        v
    };
    let inv_last = |n: usize| -> Result<TruncatedSeries<C>, SeriesError> {
        match last {
            LastFactor::Full => Ok(inv_qq[n.min(cutoff)].clone()),
            LastFactor::DropFirst => inv_pochhammer(2, 1, Count::Finite(n.saturating_sub(1)), cutoff),
        }
    };

    let mut total = TruncatedSeries::zero(cutoff);
    let mut widths = Vec::with_capacity(r);
    // Iterative DFS over weakly decreasing tuples with bounded quadratic form.
    fn walk<C: Coeff>(
        widths: &mut Vec<usize>,
        r: usize,
        lin_from: usize,
        min_first: usize,
        min_last: usize,
        cutoff: usize,
        visit: &mut dyn FnMut(&[usize]) -> Result<(), SeriesError>,
    ) -> Result<(), SeriesError> {
        let depth = widths.len();
        if depth == r {
            return visit(widths);
        }
        let used: usize = widths
            .iter()
            .enumerate()
            .map(|(i, &n)| n * n + if i + 1 >= lin_from { n } else { 0 })
            .sum();
        let hi = widths.last().copied().unwrap_or(usize::MAX);
        let lo = if depth == 0 { min_first.max(min_last) } else { min_last };
        let mut n = lo;
        while n <= hi {
            let lin = if depth + 1 >= lin_from { n } else { 0 };
            if used + n * n + lin > cutoff {
                break;
            }
            widths.push(n);
            walk::<C>(widths, r, lin_from, min_first, min_last, cutoff, visit)?;
            widths.pop();
            n += 1;
        }
        Ok(())
    }
    walk::<C>(&mut widths, r, lin_from, min_first, min_last, cutoff, &mut |ns: &[usize]| {
        let exp: usize = ns
            .iter()
            .enumerate()
            .map(|(i, &n)| n * n + if i + 1 >= lin_from { n } else { 0 })
            .sum();
        let mut term = TruncatedSeries::q_power(exp, cutoff);
        for w in ns.windows(2) {
            let diff = w[0] - w[1];
            if diff > 0 {
                term = term.mul(&inv_qq[diff.min(cutoff)])?;
            }
        }
        if let Some(&n_last) = ns.last() {
            term = term.mul(&inv_last(n_last)?)?;
        }
        total.add_assign(&term)
    })?;
    Ok(total)
}

fn check_ag(k: usize, a: usize) -> Result<(), SeriesError> {
    if k < 1 || a > k {
        return Err(SeriesError::InvalidParameter(format!(
            "Andrews-Gordon parameters need k >= 1 and 0 <= a <= k, got k={k}, a={a}"
        )));
    }
    Ok(())
}

/// The Andrews-Gordon multisum
/// `sum q^{n_1^2+...+n_k^2 + n_{k+1-a}+...+n_k} / ((q)_{n_1-n_2}...(q)_{n_{k-1}-n_k}(q)_{n_k})`.
pub fn multisum_f<C: Coeff>(k: usize, a: usize, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    check_ag(k, a)?;
    multisum(k, k + 1 - a, 0, 0, LastFactor::Full, cutoff)
}

/// Whether `m` avoids the residues `0, +-(k+1-a)` modulo `2k+3`.
pub fn ag_part_allowed(k: usize, a: usize, m: usize) -> bool {
    let modulus = 2 * k + 3;
    let r = m % modulus;
    let t = (k + 1 - a) % modulus;
    m >= 1 && r != 0 && r != t && r != (modulus - t) % modulus
}

/// Product side of the Andrews-Gordon identity with part `m` marked
/// (`m = None` gives the unmarked product).
pub fn ag_product<C: Coeff>(k: usize, a: usize, m: Option<usize>, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    check_ag(k, a)?;
    let mut spec = ProductSpec::from_predicate(|p| ag_part_allowed(k, a, p), cutoff);
    if let Some(m) = m {
        spec = spec.mark(m);
    }
    marked_product(&spec, cutoff)
}

/// Sum side of the marked Andrews-Gordon identity.
pub fn marked_ag<C: Coeff>(k: usize, a: usize, m: usize, cutoff: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    check_ag(k, a)?;
    if !ag_part_allowed(k, a, m) {
        return Err(SeriesError::InvalidParameter(format!(
            "M={m} must not be congruent to 0 or +-{} modulo {}",
            k + 1 - a,
            2 * k + 3
        )));
    }
    let lin_from = k + 1 - a;
    let bracket = qint_base::<C>(m, 1, cutoff);

    // A: the single-block terms with n_1 = 1, already divided by 1 - w q^M below.
    let mut a_num = if a < k {
        // q([M-1] + w q^{M-1})
        let mut t = qint_base::<C>(m - 1, 1, cutoff);
        t.add_assign(&TruncatedSeries::monomial(C::one(), m - 1, 1, cutoff))?;
        t.shift_q(1)
    } else {
        // q^2([M-2] + w q^{M-2} + q^{M-1}); M >= 2 here since M = 1 is excluded
        let mut t = qint_base::<C>(m - 2, 1, cutoff);
        t.add_assign(&TruncatedSeries::monomial(C::one(), m - 2, 1, cutoff))?;
        t.add_assign(&TruncatedSeries::q_power(m - 1, cutoff))?;
        t.shift_q(2)
    };

    let mut rest = multisum::<C>(1, lin_from, 2, 1, LastFactor::DropFirst, cutoff)?;
    for r in 2..=k {
        rest.add_assign(&multisum(r, lin_from, 1, 1, LastFactor::DropFirst, cutoff)?)?;
    }
    a_num.add_assign(&rest.mul(&bracket)?)?;
    a_num.div_factor(m, 1)?;
    a_num.add_assign(&TruncatedSeries::one(cutoff))?;
    Ok(a_num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = TruncatedSeries<BigInt>;

    fn q_vals(s: &S) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|p| i64::try_from(p.coeff(0)).unwrap())
            .collect()
    }

    fn w_vals(s: &S, n: usize) -> Vec<i64> {
        s.q_coeff(n)
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c.clone()).unwrap())
            .collect()
    }

    #[test]
    fn qint_values() {
        assert_eq!(q_vals(&qint::<BigInt>(1, 3).unwrap()), vec![1, 0, 0, 0]);
        assert_eq!(q_vals(&qint::<BigInt>(4, 5).unwrap()), vec![1, 1, 1, 1, 0, 0]);
        assert_eq!(q_vals(&qint::<BigInt>(7, 3).unwrap()), vec![1, 1, 1, 1]);
        assert!(qint::<BigInt>(0, 3).is_err());
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer::<BigInt>(1, 1, Count::Finite(0), 4).unwrap(), S::one(4));
        assert_eq!(
            q_vals(&pochhammer::<BigInt>(1, 1, Count::Finite(2), 4).unwrap()),
            vec![1, -1, -1, 1, 0]
        );
        // (q^2;q)_2 = (1-q^2)(1-q^3), frozen from direct expansion
        assert_eq!(
            q_vals(&pochhammer::<BigInt>(2, 1, Count::Finite(2), 5).unwrap()),
            vec![1, 0, -1, -1, 0, 1]
        );
        assert!(pochhammer::<BigInt>(0, 1, Count::Finite(3), 5).unwrap().is_zero());
        // Euler pentagonal theorem: (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - ...
        assert_eq!(
            q_vals(&pochhammer::<BigInt>(1, 1, Count::Infinite, 12).unwrap()),
            vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
        );
    }

    #[test]
    fn pochhammer_inverse_round_trip() {
        let p = pochhammer::<BigInt>(3, 2, Count::Finite(5), 30).unwrap();
        let ip = inv_pochhammer::<BigInt>(3, 2, Count::Finite(5), 30).unwrap();
        assert_eq!(p.mul(&ip).unwrap(), S::one(30));
        assert_eq!(ip, p.reciprocal().unwrap());
    }

    #[test]
    fn gauss_binom_values() {
        assert_eq!(q_vals(&gauss_binom::<BigInt>(5, 0, 6).unwrap()), vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(q_vals(&gauss_binom::<BigInt>(2, 1, 3).unwrap()), vec![1, 1, 0, 0]);
        assert_eq!(q_vals(&gauss_binom::<BigInt>(4, 2, 6).unwrap()), vec![1, 1, 2, 1, 1, 0, 0]);
        assert!(gauss_binom::<BigInt>(2, 3, 6).is_err());
    }

    #[test]
    fn gauss_binom_equals_pochhammer_quotient() {
        for n in 0..=8 {
            for k in 0..=n {
                let g = gauss_binom::<BigInt>(n, k, 30).unwrap();
                let num = pochhammer::<BigInt>(1, 1, Count::Finite(n), 30).unwrap();
                let den = pochhammer::<BigInt>(1, 1, Count::Finite(k), 30)
                    .unwrap()
                    .mul(&pochhammer(1, 1, Count::Finite(n - k), 30).unwrap())
                    .unwrap();
                assert_eq!(g.mul(&den).unwrap(), num, "n={n} k={k}");
                assert!(g.is_nonnegative());
                let deg = g.coeffs().iter().rposition(|p| !p.is_zero()).unwrap();
                assert_eq!(deg, k * (n - k));
            }
        }
    }

    #[test]
    fn rr1_product_coefficient_of_q10() {
        let spec = ProductSpec::from_predicate(|m| m % 5 == 1 || m % 5 == 4, 10);
        let s: S = marked_product(&spec, 10).unwrap();
        // 9+1, 6+4, 6+1^4, 4+4+1+1, 4+1^6, 1^10
        assert_eq!(q_vals(&s)[10], 6);
    }

    #[test]
    fn marked_rr1_product_at_q9() {
        let spec = ProductSpec::from_predicate(|m| m % 5 == 1 || m % 5 == 4, 9).mark(9);
        let s: S = marked_product(&spec, 9).unwrap();
        // partitions of 9 into {1,4,6,9}: 9 | 6+1^3, 4+4+1, 4+1^5, 1^9
        assert_eq!(w_vals(&s, 9), vec![4, 1]);
    }

    #[test]
    fn simple_spec_product() {
        let spec = ProductSpec::from_parts([1]).unwrap();
        assert_eq!(q_vals(&marked_product::<BigInt>(&spec, 3).unwrap()), vec![1, 1, 1, 1]);
        assert!(ProductSpec::from_parts([0]).is_err());
    }

    #[test]
    fn multisum_k1_is_rogers_ramanujan_sum() {
        let n = 20;
        let f = multisum_f::<BigInt>(1, 0, n).unwrap();
        let alpha: Vec<S> = (0..=n).map(|j| S::q_power(j * j, n)).collect();
        assert_eq!(f, basic_sum(&alpha, 1, n).unwrap());
        assert_eq!(f.coeff(0, 0), BigInt::from(1));
    }

    #[test]
    fn multisum_k3_a2_table_count() {
        let f = multisum_f::<BigInt>(3, 2, 12).unwrap();
        assert_eq!(f.coeff(10, 0), BigInt::from(17));
    }

    #[test]
    fn marked_ag_table_profile() {
        let s = marked_ag::<BigInt>(3, 2, 3, 12).unwrap();
        assert_eq!(w_vals(&s, 10), vec![10, 4, 2, 1]);
        assert!(marked_ag::<BigInt>(3, 2, 9, 12).is_err());
        assert!(marked_ag::<BigInt>(3, 2, 7, 12).is_err());
    }

    #[test]
    fn marked_expansion_rejects_bad_alpha() {
        let alpha = vec![S::q_power(1, 5)];
        assert!(marked_expansion(&alpha, 2, 5).is_err());
    }
}
