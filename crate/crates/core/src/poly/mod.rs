//! Exact multivariate polynomials over `Q`: coefficients, monomials, monomial
//! orders, sparse polynomials, text parsing and printing.

mod coeff;
mod format;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use coeff::Coefficient;
pub(crate) use polynomial::content_of;
pub use format::{format_polynomial, monomial_to_string};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::PolyRingContext;
