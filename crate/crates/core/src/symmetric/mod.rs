//! The classical symmetric polynomials and the identities relating them.

mod det;
mod newton;
mod residue;
mod schur;
mod shorthand;

pub use det::determinant;
pub use newton::{newton_identity_defect, NewtonIdentity};
pub use residue::{residue_h_mod_h1h4, residue_p_mod_initial, ResidueClass, ResidueKind};
pub use schur::{schur_bialternant, schur_jacobi_trudi, Partition};
pub use shorthand::{expand_generator, expand_generator_list, split_generators};

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Monomial, PolyRingContext, Polynomial};

/// `p_a = x1^a + ... + xn^a`, for `a >= 1`.
pub fn power_sum(ctx: &PolyRingContext, a: u32) -> Result<Polynomial> {
    if a < 1 {
        return Err(Error::InvalidArgument("power sum degree must be at least 1".into()));
    }
    let n = ctx.ring_dim();
    Ok(Polynomial::from_terms(
        n,
        (0..n).map(|i| (Monomial::var_power(n, i, a), Coefficient::one())),
    ))
}

/// `h_a`: the sum of all monomials of degree `a`; `h_0 = 1`.
pub fn complete_homogeneous(ctx: &PolyRingContext, a: u32) -> Result<Polynomial> {
    let n = ctx.ring_dim();
    let mut terms = Vec::new();
    let mut exps = vec![0u32; n];
    compositions(&mut exps, 0, a, &mut |e| {
        terms.push((Monomial::new(e).expect("bounded by a"), Coefficient::one()))
    });
    Ok(Polynomial::from_terms(n, terms))
}

/// Calls `f` with every exponent vector whose entries from `pos` on sum to `left`.
fn compositions(exps: &mut [u32], pos: usize, left: u32, f: &mut impl FnMut(&[u32])) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        f(exps);
        exps[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        compositions(exps, pos + 1, left - e, f);
    }
    exps[pos] = 0;
}

/// `e_a`: the sum of all squarefree monomials of degree `a`; `e_0 = 1` and
/// `e_a = 0` for `a > n`.
pub fn elementary(ctx: &PolyRingContext, a: u32) -> Result<Polynomial> {
    let n = ctx.ring_dim();
    let a = a as usize;
    if a > n {
        return Ok(Polynomial::zero(n));
    }
    let mut terms = Vec::new();
    let mut chosen = Vec::with_capacity(a);
    subsets(n, a, 0, &mut chosen, &mut |s| {
        let mut exps = vec![0u32; n];
        for &i in s {
            exps[i] = 1;
        }
        terms.push((Monomial::new(&exps).expect("squarefree"), Coefficient::one()));
    });
    Ok(Polynomial::from_terms(n, terms))
}

pub(crate) fn subsets(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in start..n {
        if n - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        subsets(n, k, i + 1, chosen, f);
        chosen.pop();
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    subsets(n, k, 0, &mut Vec::with_capacity(k), &mut |s| out.push(s.to_vec()));
    out
}

/// `h_i` with the conventions `h_0 = 1` and `h_i = 0` for `i < 0`.
pub(crate) fn h_signed(ctx: &PolyRingContext, i: i64) -> Result<Polynomial> {
    if i < 0 {
        Ok(Polynomial::zero(ctx.ring_dim()))
    } else {
        complete_homogeneous(ctx, i as u32)
    }
}
