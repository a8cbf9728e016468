use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exponents = SmallVec<[u32; 8]>;

/// A power product `x1^e1 * ... * xn^en`. The total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    /// Builds a monomial, failing if the total degree overflows `u32`.
    pub fn new(exps: &[u32]) -> Result<Self> {
        let mut degree: u32 = 0;
        for &e in exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        })
    }

    /// The pure power `x_var^e` (0-based `var`).
    pub fn var_power(nvars: usize, var: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = e;
        m.degree = e;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// Product without overflow checks; callers guarantee small exponents.
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            exps,
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// `Some(i)` when this is a pure power `x_i^k` with `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut it = self.support();
        match (it.next(), it.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }

    /// Derivative exponent bookkeeping: `(e_var, m / x_var)`.
    pub(crate) fn lower(&self, var: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[var];
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[var] -= 1;
        m.degree -= 1;
        Some((e, m))
    }

    /// Permutes variables: position `i` of the result takes exponent `perm^-1`,
    /// i.e. variable `i` is sent to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = Exponents::from_elem(0, self.exps.len());
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Embeds into a larger ring, placing this monomial's variables starting at `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        let mut exps = Exponents::from_elem(0, nvars);
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::monomial_to_string(self, None))
    }
}

/// Monomial order with variable precedence `x1 > x2 > ... > xn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegRevLex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(Error::InvalidArgument(format!("unknown monomial order `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
        let chain = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[3, 0, 0])), Ordering::Less);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 7])), Ordering::Greater);
    }

    #[test]
    fn overflow_is_detected() {
        assert_eq!(Monomial::new(&[u32::MAX, 1]), Err(Error::ExponentOverflow));
        let big = m(&[u32::MAX - 1, 0]);
        assert!(big.checked_mul(&m(&[2, 0])).is_err());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 4])));
        assert_eq!(m(&[0, 3, 0]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 3, 0]).pure_power_var(), None);
    }
}
