use std::fmt;

use super::coeff::{self, Coeff};
use super::{MarkerPolynomial, SeriesError};

/// Power series in `q` modulo `q^(cutoff+1)` with [`MarkerPolynomial`] coefficients.
///
/// `coeffs[n]` is the full coefficient of `q^n`; the vector always has
/// length `cutoff + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<C> {
    cutoff: usize,
    coeffs: Vec<MarkerPolynomial<C>>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(cutoff: usize) -> Self {
        Self {
            cutoff,
            coeffs: vec![MarkerPolynomial::zero(); cutoff + 1],
        }
    }

    pub fn one(cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        s.coeffs[0] = MarkerPolynomial::one();
        s
    }

    /// `c * w^w_exp * q^q_exp`, dropped entirely when `q_exp > cutoff`.
    pub fn monomial(c: C, q_exp: usize, w_exp: usize, cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        if q_exp <= cutoff {
            s.coeffs[q_exp] = MarkerPolynomial::monomial(c, w_exp);
        }
        s
    }

    /// `q^q_exp` (or zero past the cutoff).
    pub fn q_power(q_exp: usize, cutoff: usize) -> Self {
        Self::monomial(C::one(), q_exp, 0, cutoff)
    }

    /// Builds from coefficient polynomials; entries past the cutoff are dropped
    /// and missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<MarkerPolynomial<C>>, cutoff: usize) -> Self {
        coeffs.resize(cutoff + 1, MarkerPolynomial::zero());
        Self { cutoff, coeffs }
    }

    /// Univariate polynomial in `q` from integer coefficients.
    pub fn from_q_coeffs(values: &[i64], cutoff: usize) -> Result<Self, SeriesError> {
        let mut s = Self::zero(cutoff);
        for (n, &v) in values.iter().enumerate().take(cutoff + 1) {
            s.coeffs[n] = MarkerPolynomial::constant(coeff::from_i64(v)?);
        }
        Ok(s)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coeffs(&self) -> &[MarkerPolynomial<C>] {
        &self.coeffs
    }

    /// Coefficient polynomial of `q^n` (zero past the cutoff).
    pub fn q_coeff(&self, n: usize) -> MarkerPolynomial<C> {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^n w^e`.
    pub fn coeff(&self, n: usize, e: usize) -> C {
        self.coeffs.get(n).map(|p| p.coeff(e)).unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MarkerPolynomial::is_zero)
    }

    /// Largest `w`-degree over all coefficients.
    pub fn w_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(MarkerPolynomial::degree).max()
    }

    /// Lowest `q`-exponent with a nonzero coefficient.
    pub fn q_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|p| !p.is_zero())
    }

    /// True when the `w`-degree of every `q^n` coefficient is at most `n`.
    pub fn marker_degree_bounded(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, p)| p.degree().is_none_or(|d| d <= n))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(MarkerPolynomial::is_nonnegative)
    }

    fn check_cutoff(&self, other: &Self) -> Result<(), SeriesError> {
        if self.cutoff != other.cutoff {
            return Err(SeriesError::CutoffMismatch {
                left: self.cutoff,
                right: other.cutoff,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let mut out = self.clone();
        out.sub_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<(), SeriesError> {
        self.check_cutoff(other)?;
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            dst.add_assign(src)?;
        }
        Ok(())
    }

    pub fn sub_assign(&mut self, other: &Self) -> Result<(), SeriesError> {
        self.check_cutoff(other)?;
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            dst.sub_assign(src)?;
        }
        Ok(())
    }

    pub fn neg(&self) -> Result<Self, SeriesError> {
        let coeffs = self.coeffs.iter().map(|p| p.neg()).collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            cutoff: self.cutoff,
            coeffs,
        })
    }

    pub fn scale(&self, c: &C) -> Result<Self, SeriesError> {
        let coeffs = self.coeffs.iter().map(|p| p.scale(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            cutoff: self.cutoff,
            coeffs,
        })
    }

    /// Cauchy product truncated at the cutoff.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cutoff(other)?;
        let n = self.cutoff;
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a.mul(b)?;
                out.coeffs[i + j].add_assign(&t)?;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series whose constant term is exactly `1`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnit);
        }
        // r_0 = 1, r_n = -sum_{i=1..n} a_i r_{n-i}
        let mut r: Vec<MarkerPolynomial<C>> = Vec::with_capacity(self.cutoff + 1);
        r.push(MarkerPolynomial::one());
        for n in 1..=self.cutoff {
            let mut acc = MarkerPolynomial::zero();
            for i in 1..=n {
                if self.coeffs[i].is_zero() || r[n - i].is_zero() {
                    continue;
                }
                acc.add_assign(&self.coeffs[i].mul(&r[n - i])?)?;
            }
            r.push(acc.neg()?);
        }
        Ok(Self {
            cutoff: self.cutoff,
            coeffs: r,
        })
    }

    /// Multiplies by `q^shift`.
    pub fn shift_q(&self, shift: usize) -> Self {
        let mut out = Self::zero(self.cutoff);
        if shift <= self.cutoff {
            for n in shift..=self.cutoff {
                out.coeffs[n] = self.coeffs[n - shift].clone();
            }
        }
        out
    }

    /// Multiplies by `w^shift`.
    pub fn shift_w(&self, shift: usize) -> Result<Self, SeriesError> {
        let mut out = Self::zero(self.cutoff);
        for (dst, src) in out.coeffs.iter_mut().zip(&self.coeffs) {
            dst.add_shifted(src, shift)?;
        }
        Ok(out)
    }

    /// In place: multiplies by `(1 - c * w^w_exp * q^part)`.
    pub fn mul_binomial(&mut self, c: &C, part: usize, w_exp: usize) -> Result<(), SeriesError> {
        if part > self.cutoff {
            return Ok(());
        }
        let minus_c = coeff::neg(c)?;
        // Descending n so each source term is read before it is updated.
        for n in (part..=self.cutoff).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_scaled_shifted(&lo[n - part], &minus_c, w_exp)?;
        }
        Ok(())
    }

    /// In place: multiplies by `(1 - w^w_exp * q^part)`.
    pub fn mul_factor(&mut self, part: usize, w_exp: usize) -> Result<(), SeriesError> {
        self.mul_binomial(&C::one(), part, w_exp)
    }

    /// In place: divides by `(1 - w^w_exp * q^part)`, `part >= 1`.
    pub fn div_factor(&mut self, part: usize, w_exp: usize) -> Result<(), SeriesError> {
        assert!(part >= 1, "division by a non-unit factor");
        if part > self.cutoff {
            return Ok(());
        }
        for n in part..=self.cutoff {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - part], w_exp)?;
        }
        Ok(())
    }

    /// Substitutes `w := q^s`, giving a series with no marker.
    pub fn substitute_w(&self, s: usize) -> Result<Self, SeriesError> {
        let mut out = Self::zero(self.cutoff);
        for (n, p) in self.coeffs.iter().enumerate() {
            for (e, c) in p.terms() {
                let target = n + s * e;
                if target <= self.cutoff {
                    let dst = &mut out.coeffs[target];
                    dst.add_assign(&MarkerPolynomial::constant(c.clone()))?;
                }
            }
        }
        Ok(out)
    }

    /// Substitutes an integer value for `w`.
    pub fn eval_w(&self, w: &C) -> Result<Self, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| p.eval(w).map(MarkerPolynomial::constant))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            cutoff: self.cutoff,
            coeffs,
        })
    }

    /// Restricts to a smaller cutoff.
    pub fn truncate(&self, cutoff: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(cutoff + 1);
        Self::from_coeffs(coeffs, cutoff)
    }

    /// Converts into another coefficient ring.
    pub fn convert<D: Coeff>(&self) -> Result<TruncatedSeries<D>, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(MarkerPolynomial::convert)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries {
            cutoff: self.cutoff,
            coeffs,
        })
    }

    /// First `(q, w)` position where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let n = self.cutoff.min(other.cutoff);
        for q in 0..=n {
            let (a, b) = (&self.coeffs[q], &other.coeffs[q]);
            if a != b {
                let len = a.coeffs().len().max(b.coeffs().len());
                let e = (0..len).find(|&e| a.coeff(e) != b.coeff(e)).unwrap_or(0);
                return Some((q, e));
            }
        }
        None
    }
}

impl<C: Coeff> fmt::Display for TruncatedSeries<C> {
    /// `(c0) + (c1)*q + (c2)*q^2 + ...`, skipping zero coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*q")?,
                _ => write!(f, "({p})*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
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

    #[test]
    fn one_minus_q_times_reciprocal_is_one() {
        let a = S::from_q_coeffs(&[1, -1], 8).unwrap();
        let r = a.reciprocal().unwrap();
        assert_eq!(a.mul(&r).unwrap(), S::one(8));
    }

    #[test]
    fn geometric_reciprocal() {
        let a = S::from_q_coeffs(&[1, -1], 4).unwrap();
        assert_eq!(q_vals(&a.reciprocal().unwrap()), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn marked_geometric_reciprocal() {
        // 1/(1 - w q^3) at cutoff 7 = 1 + w q^3 + w^2 q^6
        let mut a = S::one(7);
        a.mul_factor(3, 1).unwrap();
        let r = a.reciprocal().unwrap();
        let mut expect = S::one(7);
        expect.add_assign(&S::monomial(BigInt::from(1), 3, 1, 7)).unwrap();
        expect.add_assign(&S::monomial(BigInt::from(1), 6, 2, 7)).unwrap();
        assert_eq!(r, expect);
        let mut d = S::one(7);
        d.div_factor(3, 1).unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn cutoff_mismatch_and_non_unit() {
        assert_eq!(
            S::one(3).add(&S::one(4)),
            Err(SeriesError::CutoffMismatch { left: 3, right: 4 })
        );
        let two = S::from_q_coeffs(&[2, 1], 3).unwrap();
        assert_eq!(two.reciprocal(), Err(SeriesError::NonUnit));
        let marked = S::monomial(BigInt::from(1), 0, 1, 3);
        assert_eq!(marked.reciprocal(), Err(SeriesError::NonUnit));
    }

    #[test]
    fn substitution_and_evaluation() {
        // 1/(1 - w q^2) with w := q^3 is 1/(1 - q^5)
        let mut a = S::one(12);
        a.div_factor(2, 1).unwrap();
        let mut b = S::one(12);
        b.div_factor(5, 0).unwrap();
        assert_eq!(a.substitute_w(3).unwrap(), b);
        let mut c = S::one(12);
        c.div_factor(2, 0).unwrap();
        assert_eq!(a.eval_w(&BigInt::from(1)).unwrap(), c);
    }

    #[test]
    fn display_format() {
        let mut a = S::one(4);
        a.div_factor(2, 1).unwrap();
        a.mul_factor(1, 0).unwrap();
        assert_eq!(a.to_string(), "(1) + (-1)*q + (w)*q^2 + (-w)*q^3 + (w^2)*q^4");
        assert_eq!(S::zero(3).to_string(), "0");
    }
}
