use std::fmt;

use super::coeff::{self, Coeff};
use super::SeriesError;

/// Polynomial in the marker variable `w` with exact integer coefficients.
///
/// Stored densely by `w`-exponent; trailing zeros are always trimmed so the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkerPolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Default for MarkerPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> MarkerPolynomial<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * w^e`.
    pub fn monomial(c: C, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); e + 1];
        coeffs[e] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `w`-degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `w^e` (zero beyond the degree).
    pub fn coeff(&self, e: usize) -> C {
        self.coeffs.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// True when the polynomial is the integer `1` with no `w` part.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &C)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
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
        self.add_shifted(other, 0)
    }

    pub fn sub_assign(&mut self, other: &Self) -> Result<(), SeriesError> {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), C::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst = coeff::sub(dst, src)?;
        }
        self.trim();
        Ok(())
    }

    /// `self += w^shift * other`.
    pub fn add_shifted(&mut self, other: &Self, shift: usize) -> Result<(), SeriesError> {
        if other.is_zero() {
            return Ok(());
        }
        let need = other.coeffs.len() + shift;
        if need > self.coeffs.len() {
            self.coeffs.resize(need, C::zero());
        }
        for (i, src) in other.coeffs.iter().enumerate() {
            let dst = &mut self.coeffs[i + shift];
            *dst = coeff::add(dst, src)?;
        }
        self.trim();
        Ok(())
    }

    /// `self += c * w^shift * other`.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &C, shift: usize) -> Result<(), SeriesError> {
        if other.is_zero() || c.is_zero() {
            return Ok(());
        }
        let need = other.coeffs.len() + shift;
        if need > self.coeffs.len() {
            self.coeffs.resize(need, C::zero());
        }
        for (i, src) in other.coeffs.iter().enumerate() {
            let term = coeff::mul(src, c)?;
            let dst = &mut self.coeffs[i + shift];
            *dst = coeff::add(dst, &term)?;
        }
        self.trim();
        Ok(())
    }

    pub fn neg(&self) -> Result<Self, SeriesError> {
        let coeffs = self.coeffs.iter().map(coeff::neg).collect::<Result<Vec<_>, _>>()?;
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: &C) -> Result<Self, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| coeff::mul(x, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = coeff::mul(a, b)?;
                coeffs[i + j] = coeff::add(&coeffs[i + j], &t)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Evaluates at an integer value of `w` (Horner).
    pub fn eval(&self, w: &C) -> Result<C, SeriesError> {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = coeff::add(&coeff::mul(&acc, w)?, c)?;
        }
        Ok(acc)
    }

    /// True when every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        !self.coeffs.iter().any(coeff::is_negative)
    }

    /// Converts into another coefficient ring.
    pub fn convert<D: Coeff>(&self) -> Result<MarkerPolynomial<D>, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| coeff::from_big(&coeff::to_big(c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MarkerPolynomial::from_coeffs(coeffs))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Coeff> fmt::Display for MarkerPolynomial<C> {
    /// Renders as `1 + 2*w - w^3`; the zero polynomial renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let big = coeff::to_big(c);
            let negative = big.sign() == num_bigint::Sign::Minus;
            let mag = if negative { -big } else { big };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag == num_bigint::BigInt::from(1);
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "w")?,
                (1, false) => write!(f, "{mag}*w")?,
                (_, true) => write!(f, "w^{e}")?,
                (_, false) => write!(f, "{mag}*w^{e}")?,
            }
        }
        Ok(())
    }
}
