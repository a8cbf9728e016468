//! Graded Artinian quotients `R = S/I`, multiplication maps `×ℓ^d: R_i → R_(i+d)`
//! on standard-monomial bases, and the strong Lefschetz check.

mod rank;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::groebner::{
    groebner_basis_with, has_all_pure_powers, standard_monomials, GroebnerBasis, GroebnerConfig,
    IdealSpec,
};
use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

pub use rank::rank;

/// Dense rational matrix, row-major.
pub type RationalMatrix = Vec<Vec<Coefficient>>;

/// `S/I` with a degrevlex standard-monomial basis split by degree.
#[derive(Debug, Clone)]
pub struct ArtinianPresentation {
    ideal: IdealSpec,
    gb: GroebnerBasis,
    graded: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl ArtinianPresentation {
    pub fn ideal(&self) -> &IdealSpec {
        &self.ideal
    }

    /// All standard monomials, ascending by degree.
    pub fn basis(&self) -> Vec<Monomial> {
        self.graded.iter().flatten().cloned().collect()
    }

    /// Standard monomials of degree `i` (empty past the socle degree).
    pub fn basis_in_degree(&self, i: usize) -> &[Monomial] {
        self.graded.get(i).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn socle_degree(&self) -> usize {
        self.graded.len() - 1
    }

    /// `HF(0), ..., HF(c)`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.graded.iter().map(|v| v.len()).collect()
    }

    pub fn hf(&self, i: usize) -> usize {
        self.basis_in_degree(i).len()
    }

    pub fn dimension(&self) -> usize {
        self.graded.iter().map(|v| v.len()).sum()
    }

    fn coordinates(&self, f: &Polynomial, degree: usize) -> Result<Vec<Coefficient>> {
        let mut out = vec![Coefficient::zero(); self.hf(degree)];
        for (m, c) in f.terms() {
            let pos = self
                .index
                .get(degree)
                .and_then(|ix| ix.get(m))
                .ok_or_else(|| Error::Internal("normal form left the standard basis".into()))?;
            out[*pos] = c.clone();
        }
        Ok(out)
    }
}

pub fn artinian_presentation(ideal: &IdealSpec) -> Result<ArtinianPresentation> {
    artinian_presentation_with(ideal, &GroebnerConfig::default())
}

/// Builds the presentation from a reduced degrevlex Gröbner basis.
pub fn artinian_presentation_with(
    ideal: &IdealSpec,
    cfg: &GroebnerConfig,
) -> Result<ArtinianPresentation> {
    ideal.check_homogeneous()?;
    let n = ideal.ring_dim();
    let order = MonomialOrder::DegRevLex;
    let gb = groebner_basis_with(ideal, order, cfg)?;
    if gb.is_unit_ideal() {
        return Err(Error::InvalidArgument("the quotient by the unit ideal is zero".into()));
    }
    let lms = gb.leading_monomials();
    if !has_all_pure_powers(n, &lms) {
        return Err(Error::NotArtinian);
    }
    let basis = standard_monomials(n, &lms, order);
    let top = basis.iter().map(|m| m.degree() as usize).max().unwrap_or(0);
    let mut graded = vec![Vec::new(); top + 1];
    for m in basis {
        graded[m.degree() as usize].push(m);
    }
    let index = graded
        .iter()
        .map(|v| v.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
        .collect();
    Ok(ArtinianPresentation {
        ideal: ideal.clone(),
        gb,
        graded,
        index,
    })
}

fn check_linear(a: &ArtinianPresentation, ell: &Polynomial) -> Result<()> {
    if ell.nvars() != a.ideal.ring_dim() {
        return Err(Error::RingMismatch {
            left: a.ideal.ring_dim(),
            right: ell.nvars(),
        });
    }
    if ell.is_zero() || !ell.is_homogeneous() || ell.degree() != Some(1) {
        return Err(Error::InvalidArgument("Lefschetz element must be a nonzero linear form".into()));
    }
    Ok(())
}

/// Matrix of `×ℓ^d: R_i → R_(i+d)`: column `j` holds the coordinates of
/// `NF(ℓ^d μ_j)` for the `j`-th degree-`i` standard monomial. Shape is
/// `HF(i+d) x HF(i)`; past the socle degree the matrix has no rows.
pub fn multiplication_matrix(
    a: &ArtinianPresentation,
    ell: &Polynomial,
    i: usize,
    d: usize,
) -> Result<RationalMatrix> {
    check_linear(a, ell)?;
    if i > a.socle_degree() || d < 1 {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= i <= {} and d >= 1, got i={i}, d={d}",
            a.socle_degree()
        )));
    }
    let ell_d = ell.pow(d as u32)?;
    let source = a.basis_in_degree(i);
    let target = i + d;
    let mut m = vec![vec![Coefficient::zero(); source.len()]; a.hf(target)];
    for (j, mu) in source.iter().enumerate() {
        let img = a.gb.normal_form(&ell_d.mul_term(mu, &Coefficient::one())?)?;
        for (r, c) in a.coordinates(&img, target)?.into_iter().enumerate() {
            m[r][j] = c;
        }
    }
    Ok(m)
}

/// Product `x * y` of rational matrices.
fn mat_mul(x: &RationalMatrix, y: &RationalMatrix, inner: usize, cols: usize) -> RationalMatrix {
    x.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Coefficient::zero();
                    for (k, xk) in row.iter().enumerate().take(inner) {
                        if !xk.is_zero() && !y[k][j].is_zero() {
                            acc += &(xk * &y[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Rank of one map in an SLP check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapRank {
    pub i: usize,
    pub d: usize,
    pub rank: usize,
    pub required: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SLPReport {
    pub element: Polynomial,
    pub hilbert: Vec<usize>,
    pub socle_degree: usize,
    pub verdict: bool,
    /// Every `(i, d)` checked, in order of `i` then `d`.
    pub maps: Vec<MapRank>,
    pub failures: Vec<MapRank>,
}

pub fn slp_check(ideal: &IdealSpec, ell: &Polynomial) -> Result<SLPReport> {
    slp_check_with(ideal, ell, Execution::default(), &GroebnerConfig::default())
}

/// Checks that `×ℓ^d: R_i → R_(i+d)` has rank `min(HF(i), HF(i+d))` for all
/// `0 <= i < c` and `1 <= d <= c - i`.
///
/// The one-step maps `R_j → R_(j+1)` are built once; `×ℓ^d` from `R_i` is
/// their composite, since normal forms respect products.
pub fn slp_check_with(
    ideal: &IdealSpec,
    ell: &Polynomial,
    exec: Execution,
    cfg: &GroebnerConfig,
) -> Result<SLPReport> {
    let a = artinian_presentation_with(ideal, cfg)?;
    check_linear(&a, ell)?;
    let c = a.socle_degree();
    let steps: Vec<usize> = (0..c).collect();
    let one_step: Vec<RationalMatrix> = exec
        .map_ref(&steps, |&j| multiplication_matrix(&a, ell, j, 1))
        .into_iter()
        .collect::<Result<_>>()?;

    let pairs: Vec<(usize, usize)> = (0..c).flat_map(|i| (1..=c - i).map(move |d| (i, d))).collect();
    let hf = a.hilbert();
    let maps = exec.map_ref(&pairs, |&(i, d)| {
        let mut m = one_step[i].clone();
        for j in i + 1..i + d {
            m = mat_mul(&one_step[j], &m, hf[j], hf[i]);
        }
        MapRank {
            i,
            d,
            rank: rank(&m),
            required: hf[i].min(hf[i + d]),
        }
    });
    let failures: Vec<MapRank> = maps.iter().filter(|m| m.rank != m.required).cloned().collect();
    Ok(SLPReport {
        element: ell.clone(),
        hilbert: hf,
        socle_degree: c,
        verdict: failures.is_empty(),
        maps,
        failures,
    })
}

/// `x_1 + ... + x_n`.
pub fn default_element(n: usize) -> Polynomial {
    Polynomial::from_terms(
        n,
        (0..n).map(|i| (Monomial::var_power(n, i, 1), Coefficient::one())),
    )
}

#[cfg(test)]
mod tests;
