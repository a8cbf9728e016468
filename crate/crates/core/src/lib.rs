//! Exact computer algebra for ideals generated by symmetric polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: rational coefficients, monomials and orders, sparse polynomials,
//!   the text grammar, formal derivatives.
//! * [`groebner`]: Buchberger's algorithm, normal forms, membership, equality,
//!   initial ideals, Krull dimension, Artinian quotient bases.
//! * [`symmetric`]: power sums, complete and elementary symmetric polynomials,
//!   Schur polynomials, Newton identities, residue formulas.
//! * [`primecert`]: Jacobians, minor ideals, regular sequences and the
//!   Serre-criterion primality certificate.
//! * [`cyclotomic`]: cyclotomic polynomials and vanishing sums of roots of unity.
//! * [`lefschetz`]: Hilbert functions, multiplication maps and the strong
//!   Lefschetz check.
//! * [`scan`]: conjecture sweeps over families of ideals.
//!
//! All computation is over `Q`; everything is deterministic.

pub mod cyclotomic;
pub mod error;
pub mod exec;
pub mod groebner;
pub mod lefschetz;
pub mod poly;
pub mod primecert;
pub mod scan;
pub mod symmetric;

pub use error::{Error, Result};
pub use exec::Execution;
pub use groebner::{GroebnerBasis, GroebnerConfig, IdealSpec};
pub use poly::{Coefficient, Monomial, MonomialOrder, PolyRingContext, Polynomial};
