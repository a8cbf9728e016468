//! Closed-form residues of power sums and complete symmetric polynomials
//! modulo the ideals `<p_1, ..., p_(n-1)>` and `<h_1, h_4>` (three variables).
//!
//! Modulo `<p_1, ..., p_(n-1)> = <e_1, ..., e_(n-1)>` Newton's identity
//! collapses to `p_c = (-1)^(n-1) e_n p_(c-n)` with `p_n = (-1)^(n-1) n e_n`,
//! so `p_(nk) ≡ (-1)^((n-1)k) n e_n^k` and all other `p_c` vanish.
//!
//! Modulo `<h_1, h_4> = <e_1, e_2^2>` (n = 3) the generating function of `h`
//! becomes `1/(1-e_3 t^3) - e_2 t^2/(1-e_3 t^3)^2`.
//!
//! Both sets of signs are checked against Gröbner reduction in the tests.

use serde::{Deserialize, Serialize};

use super::elementary;
use crate::error::{Error, Result};
use crate::poly::{Coefficient, PolyRingContext, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueKind {
    Zero,
    /// `scalar * e_n^k`
    ScalarTimesEPower,
    /// `scalar * e_2 * e_3^k`
    ScalarTimesE2E3Power,
}

/// Structured residue class; `scalar` and `exponent` are meaningless for `Zero`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueClass {
    pub kind: ResidueKind,
    pub scalar: Coefficient,
    pub exponent: u32,
}

impl ResidueClass {
    pub fn zero() -> Self {
        ResidueClass {
            kind: ResidueKind::Zero,
            scalar: Coefficient::zero(),
            exponent: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.kind == ResidueKind::Zero
    }

    /// The representative as an explicit polynomial in `ctx`.
    pub fn to_polynomial(&self, ctx: &PolyRingContext) -> Result<Polynomial> {
        let n = ctx.ring_dim();
        match self.kind {
            ResidueKind::Zero => Ok(Polynomial::zero(n)),
            ResidueKind::ScalarTimesEPower => Ok(elementary(ctx, n as u32)?
                .pow(self.exponent)?
                .scale(&self.scalar)),
            ResidueKind::ScalarTimesE2E3Power => {
                if n < 3 {
                    return Err(Error::InvalidArgument("e_2 e_3^k needs at least 3 variables".into()));
                }
                Ok(elementary(ctx, 2)?
                    .mul(&elementary(ctx, 3)?.pow(self.exponent)?)?
                    .scale(&self.scalar))
            }
        }
    }
}

/// Class of `p_c` modulo `<p_1, ..., p_(n-1)>` in `ctx`'s `n` variables.
pub fn residue_p_mod_initial(ctx: &PolyRingContext, c: u32) -> Result<ResidueClass> {
    if c < 1 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let n = ctx.ring_dim() as u32;
    if !c.is_multiple_of(n) {
        return Ok(ResidueClass::zero());
    }
    let k = c / n;
    let negative = ((n - 1) as u64 * k as u64) % 2 == 1;
    let mut scalar = Coefficient::from_int(n as i64);
    if negative {
        scalar = -scalar;
    }
    Ok(ResidueClass {
        kind: ResidueKind::ScalarTimesEPower,
        scalar,
        exponent: k,
    })
}

/// Class of `h_c` modulo `<h_1, h_4>` in three variables.
pub fn residue_h_mod_h1h4(c: u32) -> Result<ResidueClass> {
    if c < 1 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let k = c / 3;
    Ok(match c % 3 {
        0 => ResidueClass {
            kind: ResidueKind::ScalarTimesEPower,
            scalar: Coefficient::one(),
            exponent: k,
        },
        1 => ResidueClass::zero(),
        _ => ResidueClass {
            kind: ResidueKind::ScalarTimesE2E3Power,
            scalar: -Coefficient::from_int(k as i64 + 1),
            exponent: k,
        },
    })
}
