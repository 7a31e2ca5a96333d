//! Exact integer coefficient rings.

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, ToBigInt};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Zero};

use super::SeriesError;

/// An exact integer ring usable as the coefficient type of a [`MarkerPolynomial`].
///
/// Arithmetic goes through the `checked_*` operations so that fixed-width
/// instantiations (`i64`, `i128`) report overflow instead of wrapping. The
/// arbitrary-precision instantiation (`BigInt`) never overflows.
///
/// [`MarkerPolynomial`]: super::MarkerPolynomial
pub trait Coeff:
    Clone
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToBigInt
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + Debug
        + Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToBigInt
        + Send
        + Sync
        + 'static
{
}

#[inline]
pub(crate) fn add<C: Coeff>(a: &C, b: &C) -> Result<C, SeriesError> {
    a.checked_add(b).ok_or(SeriesError::Overflow)
}

#[inline]
pub(crate) fn sub<C: Coeff>(a: &C, b: &C) -> Result<C, SeriesError> {
    a.checked_sub(b).ok_or(SeriesError::Overflow)
}

#[inline]
pub(crate) fn mul<C: Coeff>(a: &C, b: &C) -> Result<C, SeriesError> {
    a.checked_mul(b).ok_or(SeriesError::Overflow)
}

#[inline]
pub(crate) fn neg<C: Coeff>(a: &C) -> Result<C, SeriesError> {
    C::zero().checked_sub(a).ok_or(SeriesError::Overflow)
}

pub(crate) fn from_i64<C: Coeff>(v: i64) -> Result<C, SeriesError> {
    C::from_i64(v).ok_or(SeriesError::Overflow)
}

pub(crate) fn to_big<C: Coeff>(c: &C) -> BigInt {
    c.to_bigint().expect("integer coefficient converts to BigInt")
}

pub(crate) fn is_negative<C: Coeff>(c: &C) -> bool {
    to_big(c) < BigInt::zero()
}

/// Converts a `BigInt` into the ring, failing when it does not fit.
pub(crate) fn from_big<C: Coeff>(v: &BigInt) -> Result<C, SeriesError> {
    use num_traits::ToPrimitive;
    if let Some(small) = v.to_i64() {
        return from_i64(small);
    }
    let base = from_i64::<C>(1 << 32)?;
    let mut acc = C::zero();
    let (sign, digits) = v.to_u32_digits();
    for digit in digits.iter().rev() {
        acc = add(&mul(&acc, &base)?, &from_i64(i64::from(*digit))?)?;
    }
    if sign == num_bigint::Sign::Minus {
        acc = neg(&acc)?;
    }
    Ok(acc)
}
