use super::{Monomial, Polynomial, PolyRingContext};

fn var_name(i: usize, ctx: Option<&PolyRingContext>) -> String {
    match ctx {
        Some(c) => c.names()[i].clone(),
        None => format!("x{}", i + 1),
    }
}

/// `x1^2*x3`, or `1` for the unit monomial.
pub fn monomial_to_string(m: &Monomial, ctx: Option<&PolyRingContext>) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| {
            if *e == 1 {
                var_name(i, ctx)
            } else {
                format!("{}^{}", var_name(i, ctx), e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Prints `p` in the input grammar, terms in canonical (degrevlex) order.
pub fn format_polynomial(p: &Polynomial, ctx: Option<&PolyRingContext>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&monomial_to_string(m, ctx));
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&monomial_to_string(m, ctx));
        }
    }
    out
}
