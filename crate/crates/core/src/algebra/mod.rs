//! Exact arithmetic substrate: prime-field scalars, dense polynomials,
//! truncated Laurent series and matrices.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod series;

pub use field::{FieldElement, PrimeField};
pub use matrix::{mat_kernel, Matrix};
pub use poly::{poly_gcd, Polynomial};
pub use series::{series_invert, series_sqrt, LaurentSeries, EXACT};
