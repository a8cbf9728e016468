//! Cyclotomic polynomials and exact vanishing sums of roots of unity.
//!
//! A sum `Σ ζ^(k e_i)` for a primitive `m`-th root of unity `ζ` vanishes iff
//! `Φ_m` divides `Σ x^((k e_i) mod m)` in `Z[x]`; no floating point is
//! involved in any decision.

mod weights;

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

pub use weights::{
    lam_leung_weights, no_vanish_guarantee, soundness_sweep, weight_set, weight_set_with,
    EnumConfig, SoundnessReport, WeightReport, Witness,
};

/// Integer coefficients, lowest degree first.
pub type UniPoly = Vec<i64>;

fn trim(p: &mut UniPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Quotient and remainder of `a` by the monic `b`.
fn div_rem_monic(a: &[i64], b: &[i64]) -> Result<(UniPoly, UniPoly)> {
    debug_assert_eq!(b.last(), Some(&1));
    let mut r: UniPoly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return Ok((vec![], r));
    }
    let mut q = vec![0i64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = r[i + j]
                    .checked_sub(c.checked_mul(bj).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
        }
    }
    trim(&mut r);
    trim(&mut q);
    Ok((q, r))
}

fn overflow() -> Error {
    Error::Internal("cyclotomic coefficient overflow".into())
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// `Φ_m`, obtained by dividing `x^m - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_poly(m: u64) -> Result<UniPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be at least 1".into()));
    }
    if m > 1 << 16 {
        return Err(Error::InvalidArgument(format!("cyclotomic index {m} too large")));
    }
    let mut table: HashMap<u64, UniPoly> = HashMap::new();
    for d in divisors(m) {
        let mut num = vec![0i64; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let (q, r) = div_rem_monic(&num, &table[&e])?;
            if !r.is_empty() {
                return Err(Error::Internal(format!("Φ_{e} does not divide x^{d} - 1")));
            }
            num = q;
        }
        table.insert(d, num);
    }
    Ok(table.remove(&m).expect("m divides itself"))
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    (1..=m).filter(|&j| j.gcd(&m) == 1).count() as u64
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Smallest prime factor of `m >= 2`.
pub(crate) fn smallest_prime(m: u64) -> u64 {
    prime_divisors(m).first().copied().unwrap_or(m)
}

/// Product of the distinct prime divisors.
pub fn radical(m: u64) -> u64 {
    prime_divisors(m).into_iter().product()
}

/// Human-readable `x^2 - x + 1` style rendering.
pub fn format_univariate(p: &[i64], var: &str) -> String {
    let mut out = String::new();
    for (e, &c) in p.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A multiset of exponents of an `m`-th root of unity, raised to the power `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSumSpec {
    modulus: u64,
    exponents: Vec<u64>,
    power: u64,
}

impl RootSumSpec {
    /// Exponents are reduced mod `m` and sorted.
    pub fn new(modulus: u64, exponents: &[i64], power: u64) -> Result<Self> {
        if modulus == 0 || power == 0 {
            return Err(Error::InvalidArgument("modulus and power must be positive".into()));
        }
        let mut exps: Vec<u64> = exponents
            .iter()
            .map(|&e| e.rem_euclid(modulus as i64) as u64)
            .collect();
        exps.sort_unstable();
        Ok(RootSumSpec {
            modulus,
            exponents: exps,
            power,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn power(&self) -> u64 {
        self.power
    }

    pub fn weight(&self) -> usize {
        self.exponents.len()
    }
}

/// Exact test of `Σ ζ^(k e_i) = 0` for a primitive `m`-th root `ζ`.
pub fn vanishes(spec: &RootSumSpec) -> Result<bool> {
    let m = spec.modulus;
    let mut p = vec![0i64; m as usize];
    for &e in &spec.exponents {
        let idx = ((e as u128 * spec.power as u128) % m as u128) as usize;
        p[idx] += 1;
    }
    let (_, r) = div_rem_monic(&p, &cyclotomic_poly(m)?)?;
    Ok(r.is_empty())
}
