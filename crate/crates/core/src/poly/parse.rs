//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' nat)?
//! coeff  := int | int '/' nat
//! ```
//!
//! Variables are looked up by name in the ring context (`x1 .. xn` by
//! default). Whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Coefficient, Monomial, Polynomial, PolyRingContext};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a PolyRingContext,
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.ctx.ring_dim();
        let mut terms = Vec::new();
        let mut sign_negative = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            sign_negative = c == b'-';
            self.pos += 1;
        }
        loop {
            let (m, mut c) = self.term()?;
            if sign_negative {
                c = -c;
            }
            terms.push((m, c));
            match self.peek() {
                None => break,
                Some(b'+') => sign_negative = false,
                Some(b'-') => sign_negative = true,
                Some(other) => {
                    return syntax(self.pos, format!("unexpected character `{}`", other as char))
                }
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(n, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Coefficient)> {
        let n = self.ctx.ring_dim();
        let mut mono = Monomial::one(n);
        let mut coeff = Coefficient::one();
        match self.peek() {
            Some(b'0'..=b'9') => {
                coeff = self.coeff()?;
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                mono = self.factor()?;
            }
            Some(b) => return syntax(self.pos, format!("expected a term, found `{}`", b as char)),
            None => return syntax(self.pos, "expected a term, found end of input"),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.skip_ws();
            let f = self.factor()?;
            mono = mono.checked_mul(&f)?;
        }
        Ok((mono, coeff))
    }

    fn coeff(&mut self) -> Result<Coefficient> {
        let start = self.pos;
        let num: BigInt = self
            .digits()
            .parse()
            .or_else(|_| syntax(start, "expected an integer"))?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let dpos = self.pos;
            let den: BigInt = self
                .digits()
                .parse()
                .or_else(|_| syntax(dpos, "expected a denominator"))?;
            if den.is_zero() {
                return syntax(dpos, "zero denominator");
            }
            return Ok(Coefficient::new(num, den));
        }
        Ok(Coefficient::from_bigint(num))
    }

    fn factor(&mut self) -> Result<Monomial> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            return syntax(start, "expected a variable");
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        let var = self
            .ctx
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let epos = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return syntax(epos, "expected an exponent");
            }
            exp = digits.parse().map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Monomial::var_power(self.ctx.ring_dim(), var, exp))
    }
}

/// Parses `text` as a polynomial in the ring `ctx`.
pub fn parse_polynomial(text: &str, ctx: &PolyRingContext) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
    };
    if p.peek().is_none() {
        return syntax(0, "empty input");
    }
    p.expr()
}
