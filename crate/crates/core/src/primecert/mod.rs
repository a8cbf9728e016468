//! Jacobian matrices, minor ideals, regular sequences and a primality
//! certificate for graded complete intersections via Serre's criterion.

mod certificate;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{krull_dimension_with, modular_dimension, GroebnerConfig, IdealSpec};
use crate::poly::{content_of, format_polynomial, PolyRingContext, Polynomial};
use crate::symmetric::{determinant, k_subsets};

pub use certificate::{
    certify_prime, certify_prime_with, combine_disjoint_primes, PrimalityCertificate, Verdict,
    GROUND_FIELD_NOTE,
};

/// Matrix of partial derivatives, one row per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianMatrix {
    ctx: PolyRingContext,
    rows: Vec<Vec<Polynomial>>,
    scalar_normalized: bool,
}

impl JacobianMatrix {
    pub fn ctx(&self) -> &PolyRingContext {
        &self.ctx
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ctx.ring_dim()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn scalar_normalized(&self) -> bool {
        self.scalar_normalized
    }

    /// Entries as text, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| format_polynomial(p, Some(&self.ctx)))
                    .collect()
            })
            .collect()
    }
}

/// Jacobian of the generators. With `normalize`, each row is divided by the
/// content of its entries, so the rows of `p_a` become `(x_i^(a-1))`.
pub fn jacobian(ideal: &IdealSpec, normalize: bool) -> JacobianMatrix {
    let n = ideal.ring_dim();
    let rows = ideal
        .generators()
        .iter()
        .map(|f| {
            let mut row: Vec<Polynomial> = (0..n)
                .map(|j| f.partial_derivative(j).expect("index in range"))
                .collect();
            if normalize {
                let c = content_of(row.iter().flat_map(|p| p.terms().iter().map(|(_, c)| c)));
                if !c.is_zero() {
                    let inv = c.recip().expect("nonzero");
                    row = row.iter().map(|p| p.scale(&inv)).collect();
                }
            }
            row
        })
        .collect();
    JacobianMatrix {
        ctx: ideal.ctx().clone(),
        rows,
        scalar_normalized: normalize,
    }
}

/// Ideal of all `size x size` minors. Zero minors are dropped; the rest are
/// made primitive with positive leading coefficient and deduplicated, in
/// the order (row subset, column subset) lexicographic.
pub fn minor_ideal(jac: &JacobianMatrix, size: usize) -> Result<IdealSpec> {
    let (r, c) = (jac.nrows(), jac.ncols());
    if size < 1 || size > r.min(c) {
        return Err(Error::InvalidArgument(format!(
            "minor size {size} outside 1..={}",
            r.min(c)
        )));
    }
    let n = jac.ncols();
    let mut gens: Vec<Polynomial> = Vec::new();
    for rows in k_subsets(r, size) {
        for cols in k_subsets(c, size) {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| jac.rows[i][j].clone()).collect())
                .collect();
            let m = determinant(&sub, n)?;
            if m.is_zero() {
                continue;
            }
            let m = m.normalized();
            if !gens.contains(&m) {
                gens.push(m);
            }
        }
    }
    IdealSpec::new(jac.ctx.clone(), gens)
}

pub fn is_regular_sequence(ideal: &IdealSpec) -> Result<bool> {
    is_regular_sequence_with(ideal, &GroebnerConfig::default())
}

/// Homogeneous `f_1, ..., f_k` form a regular sequence iff the ideal is proper
/// and `dim S/I = n - k`.
pub fn is_regular_sequence_with(ideal: &IdealSpec, cfg: &GroebnerConfig) -> Result<bool> {
    ideal.check_homogeneous()?;
    let (n, k) = (ideal.ring_dim(), ideal.len());
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    if modular_dimension(ideal, cfg)?.is_some_and(|r| r.height == k) {
        return Ok(true);
    }
    let d = krull_dimension_with(ideal, cfg)?;
    Ok(d.krull_dim == (n - k) as i64)
}

/// Arithmetic hypothesis for `<p_a, p_b>`: the smallest prime factor of
/// `b - a` exceeds `max(n, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArithmeticPrecheck {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub n0: u64,
    /// `None` when `n0 = 1`, which has no prime factor.
    pub q1: Option<u64>,
    pub condition_met: bool,
}

pub fn smallest_prime_factor(m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    Some(m)
}

pub fn arithmetic_precheck(n: u64, a: u64, b: u64) -> Result<ArithmeticPrecheck> {
    if a < 1 || a >= b {
        return Err(Error::InvalidArgument(format!("need 1 <= a < b, got a={a}, b={b}")));
    }
    let n0 = b - a;
    let q1 = smallest_prime_factor(n0);
    Ok(ArithmeticPrecheck {
        n,
        a,
        b,
        n0,
        q1,
        condition_met: q1.is_some_and(|q| q > n.max(a)),
    })
}

#[cfg(test)]
mod tests;
