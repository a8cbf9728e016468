//! Integer-coefficient working polynomials used inside Buchberger's algorithm.
//!
//! Terms are stored ascending in the active monomial order, so the leading
//! term is the last element and can be popped in O(1).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

use super::GroebnerConfig;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub(crate) terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    /// Returns the integer polynomial `scale * p` together with `scale`,
    /// chosen so the result is primitive with positive leading coefficient.
    pub(crate) fn from_poly(p: &Polynomial, order: MonomialOrder) -> (IntPoly, BigRational) {
        if p.is_zero() {
            return (IntPoly { terms: vec![] }, BigRational::one());
        }
        let content = p.content();
        let mut scale = content.recip().expect("nonzero content").into_ratio();
        let lead_negative = p
            .leading_term(order)
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if lead_negative {
            scale = -scale;
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let v = c.as_ratio() * &scale;
                debug_assert!(v.is_integer());
                (m.clone(), v.to_integer())
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        (IntPoly { terms }, scale)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub(crate) fn lc(&self) -> &BigInt {
        &self.terms.last().expect("nonzero polynomial").1
    }

    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub(crate) fn make_primitive(&mut self) {
        let g = gcd_all(self.terms.iter().map(|t| &t.1));
        if g.is_zero() {
            return;
        }
        let negate = self.lc().is_negative();
        let g = if negate { -g } else { g };
        if !g.is_one() {
            for t in &mut self.terms {
                t.1 = &t.1 / &g;
            }
        }
    }

    /// Converts back to a rational polynomial divided by its leading coefficient.
    pub(crate) fn to_monic(&self, nvars: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero(nvars);
        }
        let lc = self.lc().clone();
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Coefficient::new(c.clone(), lc.clone()))),
        )
    }

    pub(crate) fn to_polynomial_scaled(&self, nvars: usize, scale: &BigRational) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                (
                    m.clone(),
                    Coefficient::from_ratio(BigRational::from_integer(c.clone()) / scale),
                )
            }),
        )
    }
}

fn gcd_all<'a, I: Iterator<Item = &'a BigInt>>(it: I) -> BigInt {
    let mut g = BigInt::zero();
    for c in it {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `a * p - b * q * g`, where both inputs are ascending and the result is too.
fn combine(
    p: &[(Monomial, BigInt)],
    a: &BigInt,
    g: &[(Monomial, BigInt)],
    q: &Monomial,
    b: &BigInt,
    order: MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let a_is_one = a.is_one();
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut gm = g.first().map(|(m, _)| m.mul_unchecked(q));
    while i < p.len() || j < g.len() {
        let ord = match (&gm, p.get(i)) {
            (Some(m), Some((pm, _))) => order.cmp(pm, m),
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Less => {
                let (pm, pc) = &p[i];
                out.push((pm.clone(), if a_is_one { pc.clone() } else { pc * a }));
                i += 1;
            }
            Ordering::Greater => {
                let c = -(b * &g[j].1);
                out.push((gm.take().unwrap(), c));
                j += 1;
                gm = g.get(j).map(|(m, _)| m.mul_unchecked(q));
            }
            Ordering::Equal => {
                let pc = &p[i].1;
                let c = if a_is_one { pc.clone() } else { pc * a } - b * &g[j].1;
                let m = gm.take().unwrap();
                if !c.is_zero() {
                    out.push((m, c));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|(m, _)| m.mul_unchecked(q));
            }
        }
    }
    out
}

/// Outcome of reducing `f`: `scale * f ≡ remainder (mod ideal)`.
pub(crate) struct Reduced {
    pub(crate) remainder: IntPoly,
    pub(crate) scale: BigRational,
}

const CONTENT_EVERY: usize = 12;

/// Fully reduces `f` by `reducers` (each with positive leading coefficient).
///
/// Keeps track of the rational scale so callers needing the exact normal form
/// can undo it. Fails with a resource-ceiling error if an intermediate exceeds
/// `cfg.max_support` terms.
pub(crate) fn reduce(
    f: IntPoly,
    reducers: &[&IntPoly],
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<Reduced> {
    let mut p = f.terms;
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut scale = BigRational::one();
    let mut steps = 0usize;
    while let Some((m, c)) = p.last() {
        let divisor = reducers.iter().find(|g| g.lm().divides(m));
        match divisor {
            Some(g) => {
                let q = g.lm().quotient_of(m);
                let lg = g.lc();
                let d = c.gcd(lg);
                let a = lg / &d;
                let b = c / &d;
                let tail_len = p.len() - 1;
                p = combine(&p[..tail_len], &a, &g.terms[..g.len() - 1], &q, &b, order);
                if !a.is_one() {
                    for t in &mut rem {
                        t.1 *= &a;
                    }
                    scale *= BigRational::from_integer(a);
                }
                if p.len() > cfg.max_support {
                    return Err(Error::ResourceCeiling(format!(
                        "intermediate polynomial with {} terms exceeds the support cap of {}",
                        p.len(),
                        cfg.max_support
                    )));
                }
                steps += 1;
                if steps.is_multiple_of(CONTENT_EVERY) {
                    let g = gcd_all(p.iter().chain(rem.iter()).map(|t| &t.1));
                    if !g.is_zero() && !g.is_one() {
                        for t in p.iter_mut().chain(rem.iter_mut()) {
                            t.1 = &t.1 / &g;
                        }
                        scale /= BigRational::from_integer(g);
                    }
                }
            }
            None => {
                let t = p.pop().expect("nonempty");
                rem.push(t);
            }
        }
    }
    rem.reverse();
    Ok(Reduced {
        remainder: IntPoly { terms: rem },
        scale,
    })
}

/// The S-polynomial `lc(g) * (L/lm(f)) * f - lc(f) * (L/lm(g)) * g`, divided by
/// `gcd(lc f, lc g)`.
pub(crate) fn s_polynomial(f: &IntPoly, g: &IntPoly, order: MonomialOrder) -> IntPoly {
    let lcm = f.lm().lcm(g.lm());
    let uf = f.lm().quotient_of(&lcm);
    let ug = g.lm().quotient_of(&lcm);
    let d = f.lc().gcd(g.lc());
    let a = g.lc() / &d;
    let b = f.lc() / &d;
    let ftail: Vec<(Monomial, BigInt)> = f.terms[..f.len() - 1]
        .iter()
        .map(|(m, c)| (m.mul_unchecked(&uf), c.clone()))
        .collect();
    let terms = combine(&ftail, &a, &g.terms[..g.len() - 1], &ug, &b, order);
    IntPoly { terms }
}
