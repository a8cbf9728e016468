use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder};

use super::modp::leading_monomials_mod_p;
use super::{groebner_basis_with, GroebnerConfig, IdealSpec};

/// Krull dimension of `S/I` read off the initial ideal.
///
/// `krull_dim` is `-1` for the unit ideal (empty quotient), in which case
/// `height` is `ring_dim + 1`. Otherwise `height = ring_dim - krull_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub krull_dim: i64,
    pub height: usize,
    /// 0-based variable indices of a maximum independent set modulo `in(I)`.
    pub independent_set: Vec<usize>,
}

/// Support bitmasks of the given monomials.
fn support_masks(lms: &[Monomial]) -> Vec<u64> {
    lms.iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect()
}

/// Largest variable subset containing no monomial support; first found
/// in increasing mask order on ties. `None` if even the empty set fails
/// (i.e. `1` is among the monomials).
pub(crate) fn max_independent_set(nvars: usize, lms: &[Monomial]) -> Option<Vec<usize>> {
    assert!(nvars < 64, "independent-set search supports fewer than 64 variables");
    let masks = support_masks(lms);
    let mut best: Option<u64> = None;
    for u in 0u64..(1u64 << nvars) {
        if masks.iter().any(|&s| s & !u == 0) {
            continue;
        }
        if best.is_none_or(|b| u.count_ones() > b.count_ones()) {
            best = Some(u);
        }
    }
    best.map(|u| (0..nvars).filter(|i| u & (1 << i) != 0).collect())
}

/// Dimension report of the reduction of `I` modulo a large prime, provided
/// every generator is homogeneous of positive degree and the computation fits
/// the packed representation (`None` otherwise).
///
/// Upper semicontinuity of fibre dimension for the projective scheme over
/// `Spec Z` gives `height_p <= height_Q`. So `height_p = n` forces
/// `height_Q = n`, and for `k` generators `height_p = k` forces `height_Q = k`.
pub(crate) fn modular_dimension(ideal: &IdealSpec, cfg: &GroebnerConfig) -> Result<Option<DimensionReport>> {
    let positive = ideal
        .generators()
        .iter()
        .all(|g| g.is_homogeneous() && g.degree().is_some_and(|d| d > 0));
    if !positive {
        return Ok(None);
    }
    let n = ideal.ring_dim();
    Ok(leading_monomials_mod_p(ideal.generators(), n, cfg)?.map(|lms| report_from_leading(n, &lms)))
}

/// Dimension 0 certified through the modular fast path, if it applies.
fn modular_artinian(ideal: &IdealSpec, cfg: &GroebnerConfig) -> Result<bool> {
    Ok(modular_dimension(ideal, cfg)?.is_some_and(|r| r.krull_dim == 0))
}

pub fn krull_dimension(ideal: &IdealSpec) -> Result<DimensionReport> {
    krull_dimension_with(ideal, &GroebnerConfig::default())
}

/// Dimension via maximum independent sets on the leading monomials of a
/// degrevlex basis. Generators must be homogeneous.
pub fn krull_dimension_with(ideal: &IdealSpec, cfg: &GroebnerConfig) -> Result<DimensionReport> {
    ideal.check_homogeneous()?;
    let n = ideal.ring_dim();
    if modular_artinian(ideal, cfg)? {
        return Ok(DimensionReport {
            krull_dim: 0,
            height: n,
            independent_set: vec![],
        });
    }
    let gb = groebner_basis_with(ideal, MonomialOrder::DegRevLex, cfg)?;
    Ok(report_from_leading(n, &gb.leading_monomials()))
}

pub(crate) fn report_from_leading(n: usize, lms: &[Monomial]) -> DimensionReport {
    match max_independent_set(n, lms) {
        Some(set) => DimensionReport {
            krull_dim: set.len() as i64,
            height: n - set.len(),
            independent_set: set,
        },
        None => DimensionReport {
            krull_dim: -1,
            height: n + 1,
            independent_set: vec![],
        },
    }
}

pub(crate) fn has_all_pure_powers(nvars: usize, lms: &[Monomial]) -> bool {
    (0..nvars).all(|i| lms.iter().any(|m| m.pure_power_var() == Some(i)))
}

pub fn radical_is_irrelevant_maximal(ideal: &IdealSpec) -> Result<bool> {
    radical_is_irrelevant_maximal_with(ideal, &GroebnerConfig::default())
}

/// True iff the only common zero of a homogeneous ideal is the origin:
/// every variable has a pure power among the leading monomials.
pub fn radical_is_irrelevant_maximal_with(
    ideal: &IdealSpec,
    cfg: &GroebnerConfig,
) -> Result<bool> {
    ideal.check_homogeneous()?;
    if modular_artinian(ideal, cfg)? {
        return Ok(true);
    }
    let gb = groebner_basis_with(ideal, MonomialOrder::DegRevLex, cfg)?;
    Ok(has_all_pure_powers(ideal.ring_dim(), &gb.leading_monomials()))
}

pub fn quotient_basis(ideal: &IdealSpec, order: MonomialOrder) -> Result<Vec<Monomial>> {
    quotient_basis_with(ideal, order, &GroebnerConfig::default())
}

/// Standard monomials of an Artinian quotient, ascending by degree and
/// descending by `order` within a degree. Empty for the unit ideal.
pub fn quotient_basis_with(
    ideal: &IdealSpec,
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<Vec<Monomial>> {
    let n = ideal.ring_dim();
    let gb = groebner_basis_with(ideal, order, cfg)?;
    let lms = gb.leading_monomials();
    if gb.is_unit_ideal() {
        return Ok(vec![]);
    }
    if !has_all_pure_powers(n, &lms) {
        return Err(Error::NotArtinian);
    }
    Ok(standard_monomials(n, &lms, order))
}

pub(crate) fn standard_monomials(n: usize, lms: &[Monomial], order: MonomialOrder) -> Vec<Monomial> {
    let bounds: Vec<u32> = (0..n)
        .map(|i| {
            lms.iter()
                .filter(|m| m.pure_power_var() == Some(i))
                .map(|m| m.exponents()[i])
                .min()
                .expect("pure power present")
        })
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(&exps).expect("small exponents");
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box [0, bound_i)
        let mut k = 0;
        loop {
            if k == n {
                out.sort_by(|a, b| {
                    a.degree()
                        .cmp(&b.degree())
                        .then_with(|| order.cmp(b, a))
                });
                return out;
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}
