//! Generator shorthand: `p<k>`, `h<k>`, `e<k>`, `s[l1,l2,...]`, `d<i>(<gen>)`
//! (partial derivative in `x_i`), or any polynomial in the text grammar.

use super::{complete_homogeneous, elementary, power_sum, schur_jacobi_trudi, Partition};
use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, PolyRingContext, Polynomial};

fn family_index(text: &str, prefix: char) -> Option<u32> {
    let rest = text.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

/// Expands one generator expression against `ctx`.
pub fn expand_generator(text: &str, ctx: &PolyRingContext) -> Result<Polynomial> {
    let t = text.trim();
    if let Some(a) = family_index(t, 'p') {
        return power_sum(ctx, a);
    }
    if let Some(a) = family_index(t, 'h') {
        return complete_homogeneous(ctx, a);
    }
    if let Some(a) = family_index(t, 'e') {
        return elementary(ctx, a);
    }
    if let Some(inner) = t.strip_prefix("s[").and_then(|r| r.strip_suffix(']')) {
        let parts = inner
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidArgument(format!("bad partition in `{t}`")))?;
        let lambda = Partition::new(parts)?.padded(ctx.ring_dim())?;
        return schur_jacobi_trudi(ctx, &lambda);
    }
    if let Some(rest) = t.strip_prefix('d') {
        if let Some(open) = rest.find('(') {
            let idx = &rest[..open];
            if !idx.is_empty() && idx.bytes().all(|b| b.is_ascii_digit()) && rest.ends_with(')') {
                let var: usize = idx
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad index in `{t}`")))?;
                if var == 0 {
                    return Err(Error::VariableOutOfRange {
                        index: 0,
                        ring_dim: ctx.ring_dim(),
                    });
                }
                let inner = expand_generator(&rest[open + 1..rest.len() - 1], ctx)?;
                return inner.partial_derivative(var - 1);
            }
        }
    }
    parse_polynomial(t, ctx)
}

/// Splits a comma-separated generator list, ignoring commas inside brackets.
pub fn split_generators(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in list.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Expands every entry of a comma-separated list.
pub fn expand_generator_list(list: &str, ctx: &PolyRingContext) -> Result<Vec<Polynomial>> {
    split_generators(list)
        .iter()
        .map(|g| expand_generator(g, ctx))
        .collect()
}
