use serde::{Deserialize, Serialize};

use super::{determinant, h_signed};
use crate::error::{Error, Result};
use crate::poly::{Monomial, PolyRingContext, Polynomial};

/// A weakly decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// Pads with zeros (or strips trailing zeros) to exactly `n` parts.
    pub fn padded(&self, n: usize) -> Result<Partition> {
        if self.length() > n {
            return Err(Error::InvalidArgument(format!(
                "partition {:?} has more than {n} nonzero parts",
                self.0
            )));
        }
        let mut parts: Vec<u32> = self.0.iter().copied().take(n).collect();
        parts.resize(n, 0);
        Ok(Partition(parts))
    }

    /// All partitions of `total` with at most `max_len` parts, padded to `max_len`.
    pub fn all_of_size(total: u32, max_len: usize) -> Vec<Partition> {
        fn rec(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                let mut p = cur.clone();
                p.resize(p.len() + slots, 0);
                out.push(Partition(p));
                return;
            }
            if slots == 0 {
                return;
            }
            for part in (1..=cap.min(left)).rev() {
                cur.push(part);
                rec(left - part, part, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, total, max_len, &mut Vec::new(), &mut out);
        out
    }
}

fn require_length(ctx: &PolyRingContext, lambda: &Partition) -> Result<()> {
    if lambda.parts().len() != ctx.ring_dim() {
        return Err(Error::InvalidArgument(format!(
            "partition must have exactly {} parts (pad with zeros)",
            ctx.ring_dim()
        )));
    }
    Ok(())
}

/// `s_λ = det(x_i^(λ_j + n - j)) / det(x_i^(n - j))`, by exact division by the
/// Vandermonde determinant.
pub fn schur_bialternant(ctx: &PolyRingContext, lambda: &Partition) -> Result<Polynomial> {
    require_length(ctx, lambda)?;
    let n = ctx.ring_dim();
    let alternant = |shift: &dyn Fn(usize) -> u32| -> Result<Polynomial> {
        let m: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Polynomial::monomial(Monomial::var_power(n, i, shift(j))))
                    .collect()
            })
            .collect();
        determinant(&m, n)
    };
    let parts = lambda.parts();
    let numerator = alternant(&|j| parts[j] + (n - 1 - j) as u32)?;
    let vandermonde = alternant(&|j| (n - 1 - j) as u32)?;
    let (q, r) = numerator.div_rem(&vandermonde)?;
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "alternant for {parts:?} not divisible by the Vandermonde determinant"
        )));
    }
    Ok(q)
}

/// `s_λ = det(h_(λ_i - i + j))`.
pub fn schur_jacobi_trudi(ctx: &PolyRingContext, lambda: &Partition) -> Result<Polynomial> {
    require_length(ctx, lambda)?;
    let n = ctx.ring_dim();
    let parts = lambda.parts();
    let mut m = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(h_signed(ctx, parts[i] as i64 - i as i64 + j as i64)?);
        }
        m.push(row);
    }
    determinant(&m, n)
}
