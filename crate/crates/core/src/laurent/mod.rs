//! Multivariate Laurent polynomials with rational coefficients.

mod parse;
mod poly;
mod uni;

pub use parse::parse_polynomial;
pub use poly::{evaluate, restrict_to_curve, shifted_initial_form, Exponent, LaurentPolynomial};
pub use uni::{gcd_univariate, UniLaurent};
