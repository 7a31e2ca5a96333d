//! Exact verification engine for marked and shifted partition identities.
//!
//! The crate pairs truncated power series (the analytic sides) with
//! exhaustive partition enumeration (the combinatorial sides). Everything is
//! generic over an exact integer ring; the aliases below fix the usual
//! arbitrary-precision choice.

pub mod bijections;
pub mod durfee;
pub mod identities;
pub mod partitions;
pub mod qseries;

use num_bigint::BigInt;

pub use qseries::{Coeff, MarkerPolynomial, SeriesError, TruncatedSeries};

/// Series with arbitrary-precision coefficients.
pub type Series = TruncatedSeries<BigInt>;
/// Marker polynomial with arbitrary-precision coefficients.
pub type MarkerPoly = MarkerPolynomial<BigInt>;
/// Series with checked 64-bit coefficients; overflow is reported, not wrapped.
pub type Series64 = TruncatedSeries<i64>;
