//! Kolchin dimension polynomials, minimizing coefficients, characteristic
//! polynomials of graded submodules, and Bézout-type bounds on typical
//! dimension.
//!
//! All arithmetic is exact: integers are arbitrary precision and field
//! coefficients are rationals.

pub mod binomial;
pub mod bounds;
pub mod error;
pub mod graded;
pub mod kolchin;
pub mod minimizing;
pub mod serde_big;

pub use binomial::{binom, NumericalPolynomial};
pub use error::{Error, Result};
pub use kolchin::{DimPolyResult, ExponentMatrix};
pub use minimizing::{is_in_w, minimizing_coefficients, reconstruct, MinimizingCoefficients};
