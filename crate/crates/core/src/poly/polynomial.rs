use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Coefficient, Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by degree-reverse-lexicographic order, largest first,
/// with no zero coefficients, so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Coefficient)>,
}

pub(crate) const STORAGE_ORDER: MonomialOrder = MonomialOrder::DegRevLex;

fn sort_desc(terms: &mut [(Monomial, Coefficient)]) {
    terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.0, &a.0));
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coefficient::one())
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        Self::from_term(Monomial::one(nvars), c)
    }

    pub fn from_term(m: Monomial, c: Coefficient) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_term(m, Coefficient::one())
    }

    /// The variable `x_{var+1}` (0-based index).
    pub fn var(nvars: usize, var: usize) -> Result<Self> {
        if var >= nvars {
            return Err(Error::VariableOutOfRange {
                index: var + 1,
                ring_dim: nvars,
            });
        }
        Ok(Self::monomial(Monomial::var_power(nvars, var, 1)))
    }

    /// Collects terms, merging duplicate monomials and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            acc.entry(m)
                .and_modify(|e| *e += &c)
                .or_insert(c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_desc(&mut terms);
        Polynomial { nvars, terms }
    }

    /// Builds from terms already strictly descending in storage order with no zeros.
    pub(crate) fn from_sorted_unchecked(nvars: usize, terms: Vec<(Monomial, Coefficient)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| STORAGE_ORDER.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coefficient)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms
            .binary_search_by(|(t, _)| STORAGE_ORDER.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Coefficient)> {
        if order == STORAGE_ORDER {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Terms sorted descending by `order`.
    pub fn terms_in_order(&self, order: MonomialOrder) -> Vec<(Monomial, Coefficient)> {
        let mut t = self.terms.clone();
        if order != STORAGE_ORDER {
            t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        t
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match STORAGE_ORDER.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -cb } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| {
            let c = if negate_other { -c } else { c.clone() };
            (m.clone(), c)
        }));
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Result<Polynomial> {
        if m.nvars() != self.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: m.nvars(),
            });
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, a) in &self.terms {
            terms.push((t.checked_mul(m)?, a * c));
        }
        // multiplication by a monomial preserves any monomial order
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        let mut acc: HashMap<Monomial, Coefficient> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = ca * cb;
                acc.entry(m).and_modify(|e| *e += &c).or_insert(c);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_desc(&mut terms);
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, mut e: u32) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `x_{var+1}` (0-based `var`).
    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: var + 1,
                ring_dim: self.nvars,
            });
        }
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                m.lower(var)
                    .map(|(e, m2)| (m2, c * &Coefficient::from_int(e as i64)))
            })
            .collect();
        Ok(Polynomial::from_terms(self.nvars, terms))
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Coefficient {
        content_of(self.terms.iter().map(|(_, c)| c))
    }

    /// `self / content`, so integer coefficients with gcd 1 and the leading
    /// coefficient's sign preserved.
    pub fn primitive(&self) -> Polynomial {
        let c = self.content();
        match c.recip() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Primitive part with positive leading coefficient (storage order).
    pub fn normalized(&self) -> Polynomial {
        let p = self.primitive();
        match p.terms.first() {
            Some((_, c)) if c.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Divides by the leading coefficient w.r.t. `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order).and_then(|(_, c)| c.recip()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Single-divisor division in storage order: returns `(q, r)` with
    /// `self = q * divisor + r` and no term of `r` divisible by the leading
    /// monomial of `divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_same_ring(divisor)?;
        let (lm, lc) = match divisor.terms.first() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::InvalidArgument("division by zero polynomial".into())),
        };
        let mut quotient = Vec::new();
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = &c / &lc;
                p = p.sub(&divisor.mul_term(&qm, &qc)?)?;
                quotient.push((qm, qc));
            } else {
                remainder.push((m, c));
                p.terms.remove(0);
            }
        }
        Ok((
            Polynomial::from_terms(self.nvars, quotient),
            Polynomial::from_sorted_unchecked(self.nvars, remainder),
        ))
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())),
        )
    }

    /// Embeds into a ring with `nvars` variables, shifting by `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Result<Polynomial> {
        if offset + self.nvars > nvars {
            return Err(Error::RingMismatch {
                left: nvars,
                right: offset + self.nvars,
            });
        }
        Ok(Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| (m.embed(nvars, offset), c.clone())),
        ))
    }

    /// Replaces every variable `x_i` by `x_i^d`.
    pub fn inflate(&self, d: u32) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = Vec::with_capacity(self.nvars);
            for e in m.exponents() {
                exps.push(e.checked_mul(d).ok_or(Error::ExponentOverflow)?);
            }
            terms.push((Monomial::new(&exps)?, c.clone()));
        }
        Ok(Polynomial::from_terms(self.nvars, terms))
    }
}

/// Positive rational content of a list of coefficients.
pub(crate) fn content_of<'a, I>(coeffs: I) -> Coefficient
where
    I: IntoIterator<Item = &'a Coefficient>,
{
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in coeffs {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        Coefficient::zero()
    } else {
        Coefficient::new(num.abs(), den)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::format_polynomial(self, None))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
