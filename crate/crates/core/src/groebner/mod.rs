//! Gröbner bases over `Q` and the ideal-theoretic queries built on them:
//! normal forms, membership, equality, initial ideals, Krull dimension,
//! irrelevant-radical detection and standard-monomial bases.

mod buchberger;
mod dimension;
mod intpoly;
mod modp;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{format_polynomial, Monomial, MonomialOrder, PolyRingContext, Polynomial};

pub use buchberger::BuchbergerStats;
pub(crate) use dimension::{
    has_all_pure_powers, modular_dimension, report_from_leading, standard_monomials,
};
pub use dimension::{
    krull_dimension, krull_dimension_with, quotient_basis, quotient_basis_with,
    radical_is_irrelevant_maximal, radical_is_irrelevant_maximal_with, DimensionReport,
};

use intpoly::{reduce, IntPoly};

/// Resource ceilings for a Gröbner computation. Exceeding one yields
/// [`Error::ResourceCeiling`], never a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs reduced.
    pub max_spairs: usize,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_support: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_spairs: 200_000,
            max_support: 500_000,
        }
    }
}

/// An ordered list of generators in a declared ring. Order matters for
/// regular-sequence questions; the empty list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    ctx: PolyRingContext,
    generators: Vec<Polynomial>,
}

impl IdealSpec {
    pub fn new(ctx: PolyRingContext, generators: Vec<Polynomial>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.nvars() != ctx.ring_dim() {
                return Err(Error::RingMismatch {
                    left: ctx.ring_dim(),
                    right: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::InvalidArgument(format!("generator {} is zero", i + 1)));
            }
        }
        Ok(IdealSpec { ctx, generators })
    }

    pub fn zero(ctx: PolyRingContext) -> Self {
        IdealSpec {
            ctx,
            generators: Vec::new(),
        }
    }

    /// The irrelevant ideal `<x1, ..., xn>`.
    pub fn irrelevant(ctx: PolyRingContext) -> Self {
        let n = ctx.ring_dim();
        let generators = (0..n)
            .map(|i| Polynomial::monomial(Monomial::var_power(n, i, 1)))
            .collect();
        IdealSpec { ctx, generators }
    }

    pub fn ctx(&self) -> &PolyRingContext {
        &self.ctx
    }

    pub fn ring_dim(&self) -> usize {
        self.ctx.ring_dim()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Appends generators; zero polynomials are skipped.
    pub fn extended<I: IntoIterator<Item = Polynomial>>(&self, more: I) -> Result<IdealSpec> {
        let mut gens = self.generators.clone();
        gens.extend(more.into_iter().filter(|g| !g.is_zero()));
        IdealSpec::new(self.ctx.clone(), gens)
    }

    /// Reorders the generators: position `i` takes generator `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> IdealSpec {
        IdealSpec {
            ctx: self.ctx.clone(),
            generators: perm.iter().map(|&i| self.generators[i].clone()).collect(),
        }
    }

    /// Fails with [`Error::NotHomogeneous`] naming the first offending generator.
    pub fn check_homogeneous(&self) -> Result<()> {
        match self.generators.iter().position(|g| !g.is_homogeneous()) {
            Some(i) => Err(Error::NotHomogeneous(i + 1)),
            None => Ok(()),
        }
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| format_polynomial(g, Some(&self.ctx)))
            .collect()
    }
}

impl Serialize for IdealSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("IdealSpec", 2)?;
        st.serialize_field("variables", self.ctx.names())?;
        st.serialize_field("generators", &self.generator_strings())?;
        st.end()
    }
}

/// A Gröbner basis together with the order it was computed for.
///
/// When `reduced` is true every element is monic, no term of an element is
/// divisible by another element's leading monomial, and elements are sorted
/// ascending by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    basis: Vec<Polynomial>,
    reduced: bool,
    stats: BuchbergerStats,
    int_basis: Vec<IntPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.nvars == other.nvars && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn stats(&self) -> BuchbergerStats {
        self.stats
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.int_basis.iter().any(|p| p.lm().is_one())
    }

    /// Leading monomials in basis order; these minimally generate `in(I)`.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.int_basis.iter().map(|p| p.lm().clone()).collect()
    }

    /// Remainder of `f` on full division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: f.nvars(),
            });
        }
        if f.is_zero() {
            return Ok(f.clone());
        }
        let (fi, s0) = IntPoly::from_poly(f, self.order);
        let reducers: Vec<&IntPoly> = self.int_basis.iter().collect();
        let cfg = GroebnerConfig {
            max_spairs: usize::MAX,
            max_support: usize::MAX,
        };
        let r = reduce(fi, &reducers, self.order, &cfg)?;
        let total = s0 * r.scale;
        Ok(r.remainder.to_polynomial_scaled(self.nvars, &total))
    }

    /// True when `f` reduces to zero.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial of basis pairs reduces to 0.
    pub fn verify_s_pairs(&self) -> Result<bool> {
        let reducers: Vec<&IntPoly> = self.int_basis.iter().collect();
        let cfg = GroebnerConfig::default();
        for i in 0..self.int_basis.len() {
            for j in i + 1..self.int_basis.len() {
                let s = intpoly::s_polynomial(&self.int_basis[i], &self.int_basis[j], self.order);
                if !reduce(s, &reducers, self.order, &cfg)?.remainder.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Reduced Gröbner basis with the default resource ceilings.
pub fn groebner_basis(ideal: &IdealSpec, order: MonomialOrder) -> Result<GroebnerBasis> {
    groebner_basis_with(ideal, order, &GroebnerConfig::default())
}

pub fn groebner_basis_with(
    ideal: &IdealSpec,
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    let nvars = ideal.ring_dim();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| IntPoly::from_poly(g, order).0)
        .collect();
    let (int_basis, stats) = buchberger::reduced_basis(gens, order, cfg)?;
    let basis = int_basis.iter().map(|p| p.to_monic(nvars)).collect();
    Ok(GroebnerBasis {
        order,
        nvars,
        basis,
        reduced: true,
        stats,
        int_basis,
    })
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

/// `f ∈ I`, decided by reduction against a degrevlex basis.
pub fn ideal_membership(f: &Polynomial, ideal: &IdealSpec) -> Result<bool> {
    ideal_membership_with(f, ideal, &GroebnerConfig::default())
}

pub fn ideal_membership_with(
    f: &Polynomial,
    ideal: &IdealSpec,
    cfg: &GroebnerConfig,
) -> Result<bool> {
    if f.nvars() != ideal.ring_dim() {
        return Err(Error::RingMismatch {
            left: ideal.ring_dim(),
            right: f.nvars(),
        });
    }
    groebner_basis_with(ideal, MonomialOrder::DegRevLex, cfg)?.contains(f)
}

/// Equality of ideals via equal reduced degrevlex bases.
pub fn ideal_equal(a: &IdealSpec, b: &IdealSpec) -> Result<bool> {
    ideal_equal_with(a, b, &GroebnerConfig::default())
}

pub fn ideal_equal_with(a: &IdealSpec, b: &IdealSpec, cfg: &GroebnerConfig) -> Result<bool> {
    if a.ring_dim() != b.ring_dim() {
        return Err(Error::RingMismatch {
            left: a.ring_dim(),
            right: b.ring_dim(),
        });
    }
    let ga = groebner_basis_with(a, MonomialOrder::DegRevLex, cfg)?;
    let gb = groebner_basis_with(b, MonomialOrder::DegRevLex, cfg)?;
    Ok(ga.basis() == gb.basis())
}

/// Minimal monomial generators of the leading-term ideal.
pub fn initial_ideal(ideal: &IdealSpec, order: MonomialOrder) -> Result<IdealSpec> {
    initial_ideal_with(ideal, order, &GroebnerConfig::default())
}

pub fn initial_ideal_with(
    ideal: &IdealSpec,
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<IdealSpec> {
    let gb = groebner_basis_with(ideal, order, cfg)?;
    let gens = gb
        .leading_monomials()
        .into_iter()
        .map(Polynomial::monomial)
        .collect();
    IdealSpec::new(ideal.ctx().clone(), gens)
}
