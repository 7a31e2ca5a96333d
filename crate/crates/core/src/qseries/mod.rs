//! Exact truncated power series in `q` whose coefficients are polynomials in
//! a marker variable `w`, plus builders for products, Pochhammer symbols and
//! the multisums used by the identity registry.

mod builders;
mod coeff;
mod machine;
mod marker;
mod series;

pub use builders::{
    ag_part_allowed, ag_product, apply_marking, basic_sum, gauss_binom, inv_pochhammer, marked_ag,
    marked_expansion, marked_expansion_base, marked_product, multisum_f, pochhammer,
    pochhammer_plus, qint, qint_base, Count, Factor, ProductSpec,
};
pub use coeff::Coeff;
pub use machine::{from_machine, to_machine};
pub use marker::MarkerPolynomial;
pub use series::TruncatedSeries;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient overflow in fixed-width ring")]
    Overflow,
    #[error("cutoff mismatch: {left} vs {right}")]
    CutoffMismatch { left: usize, right: usize },
    #[error("constant term is not the unit 1")]
    NonUnit,
    #[error("{0}")]
    InvalidParameter(String),
    #[error("malformed machine series: {0}")]
    Malformed(String),
}
