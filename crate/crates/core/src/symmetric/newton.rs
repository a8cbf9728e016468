use serde::{Deserialize, Serialize};

use super::{complete_homogeneous, elementary, power_sum};
use crate::error::{Error, Result};
use crate::poly::{Coefficient, PolyRingContext, Polynomial};

/// The three Newton-type identities among `e`, `h` and `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NewtonIdentity {
    /// `sum_{i=0}^{m} (-1)^i e_i h_{m-i} = 0`
    Eq1,
    /// `a h_a = sum_{i=1}^{a} p_i h_{a-i}`
    Eq2,
    /// `m e_m = sum_{i=1}^{m} (-1)^{i-1} e_{m-i} p_i`
    Eq3,
}

/// LHS − RHS of the chosen identity at index `index >= 1`; always zero.
pub fn newton_identity_defect(
    ctx: &PolyRingContext,
    which: NewtonIdentity,
    index: u32,
) -> Result<Polynomial> {
    if index < 1 {
        return Err(Error::InvalidArgument("identity index must be at least 1".into()));
    }
    let n = ctx.ring_dim();
    let m = index;
    let sign = |i: u32| {
        if i.is_multiple_of(2) {
            Coefficient::one()
        } else {
            -Coefficient::one()
        }
    };
    let mut acc = Polynomial::zero(n);
    match which {
        NewtonIdentity::Eq1 => {
            for i in 0..=m {
                let t = elementary(ctx, i)?.mul(&complete_homogeneous(ctx, m - i)?)?;
                acc = acc.add(&t.scale(&sign(i)))?;
            }
        }
        NewtonIdentity::Eq2 => {
            acc = complete_homogeneous(ctx, m)?.scale(&Coefficient::from_int(m as i64));
            for i in 1..=m {
                let t = power_sum(ctx, i)?.mul(&complete_homogeneous(ctx, m - i)?)?;
                acc = acc.sub(&t)?;
            }
        }
        NewtonIdentity::Eq3 => {
            acc = elementary(ctx, m)?.scale(&Coefficient::from_int(m as i64));
            for i in 1..=m {
                let t = elementary(ctx, m - i)?.mul(&power_sum(ctx, i)?)?;
                acc = acc.sub(&t.scale(&sign(i - 1)))?;
            }
        }
    }
    Ok(acc)
}
