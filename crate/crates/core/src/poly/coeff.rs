use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (guaranteed by `BigRational`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coefficient(BigRational);

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(BigRational::zero())
    }

    pub fn one() -> Self {
        Coefficient(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Coefficient(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Coefficient(BigRational::from_integer(n))
    }

    /// `numer / denom`; panics if `denom` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        Coefficient(BigRational::new(numer, denom))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Coefficient(r)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Coefficient(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Coefficient(self.0.recip()))
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Coefficient(num_traits::pow(self.0.clone(), e as usize))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coefficient {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator `{n}`"))?;
                let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator `{d}`"))?;
                if d.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(Coefficient::new(n, d))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| format!("bad integer `{s}`"))?;
                Ok(Coefficient::from_bigint(n))
            }
        }
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl From<BigInt> for Coefficient {
    fn from(n: BigInt) -> Self {
        Coefficient::from_bigint(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                Coefficient(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Coefficient> for &'a Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &'a Coefficient) -> Coefficient {
                Coefficient((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.0 += &rhs.0;
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(-self.0)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(-&self.0)
    }
}

impl serde::Serialize for Coefficient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Coefficient {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
