//! Buchberger's algorithm over the prime field `F_p`, `p = 2^61 - 1`, in
//! degrevlex with packed monomials.
//!
//! Used only to bound heights from below: for a homogeneous ideal generated
//! by primitive integer polynomials of positive degree, the height of the
//! reduction mod `p` never exceeds the height over `Q`.
//!
//! A monomial in at most 7 variables of degree below 128 is packed into a
//! `u64` whose top byte is the degree and whose next bytes are
//! `127 - e_n, 127 - e_(n-1), ..., 127 - e_1`. Integer comparison of keys is
//! then degrevlex, multiplication is `a + b - ONE`, and divisibility is a
//! bytewise comparison.

use std::collections::{BinaryHeap, HashMap};
use std::hash::{BuildHasherDefault, Hasher};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

use super::buchberger::{Engine, WorkPoly};
use super::intpoly::IntPoly;
use super::GroebnerConfig;

pub(crate) const MODULUS: u64 = (1 << 61) - 1;

/// Largest number of variables the packing supports.
pub(crate) const MAX_VARS: usize = 7;
const MAX_DEGREE: u32 = 127;

fn mul(a: u64, b: u64) -> u64 {
    let x = a as u128 * b as u128;
    let r = (x as u64 & MODULUS) + (x >> 61) as u64;
    if r >= MODULUS {
        r - MODULUS
    } else {
        r
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    let (mut base, mut e, mut acc) = (a, MODULUS - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

fn reduce_bigint(c: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    let mut r = c % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u64().expect("reduced below the modulus")
}

/// Packing for a fixed number of variables.
#[derive(Clone, Copy, Debug)]
struct Packing {
    nvars: usize,
    /// key of the monomial 1
    one: u64,
    /// high bit of every exponent byte
    high: u64,
    /// all exponent bytes
    exps: u64,
}

impl Packing {
    fn new(nvars: usize) -> Packing {
        assert!(nvars <= MAX_VARS);
        let mut one = 0u64;
        let mut high = 0u64;
        for i in 0..nvars {
            let shift = 8 * (6 - i);
            one |= 127 << shift;
            high |= 0x80 << shift;
        }
        Packing {
            nvars,
            one,
            high,
            exps: high | one,
        }
    }

    fn pack(&self, m: &Monomial) -> Option<u64> {
        if m.degree() > MAX_DEGREE {
            return None;
        }
        let e = m.exponents();
        let mut k = (m.degree() as u64) << 56;
        // e_n sits just below the degree
        for (i, &x) in e.iter().rev().enumerate() {
            k |= (127 - x as u64) << (8 * (6 - i));
        }
        Some(k)
    }

    fn unpack(&self, k: u64) -> Monomial {
        let mut e = vec![0u32; self.nvars];
        for i in 0..self.nvars {
            let byte = (k >> (8 * (6 - i))) & 0xff;
            e[self.nvars - 1 - i] = 127 - byte as u32;
        }
        Monomial::new(&e).expect("small exponents")
    }

    /// Caller guarantees the product has degree at most `MAX_DEGREE`.
    fn mul(&self, a: u64, b: u64) -> u64 {
        a.wrapping_add(b).wrapping_sub(self.one)
    }

    /// `a | b`: every exponent of `a` is at most the one in `b`, i.e. every
    /// complemented byte of `a` is at least that of `b`.
    fn divides(&self, a: u64, b: u64) -> bool {
        let d = ((a & self.exps) | self.high).wrapping_sub(b & self.exps);
        d & self.high == self.high
    }

    /// `b / a`, assuming `a | b`.
    fn quotient(&self, a: u64, b: u64) -> u64 {
        b.wrapping_sub(a).wrapping_add(self.one)
    }
}

#[derive(Default)]
struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(8) ^ b as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        }
    }
    fn write_u64(&mut self, k: u64) {
        self.0 = (k ^ (k >> 29)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    }
}

type KeyMap = HashMap<u64, u64, BuildHasherDefault<KeyHasher>>;

/// Ascending `(key, residue)` terms, leading term last; `lead` caches the
/// leading monomial for the pair machinery.
#[derive(Clone, Debug)]
pub(crate) struct ModPoly {
    packing: Packing,
    lead: Monomial,
    terms: Vec<(u64, u64)>,
}

/// Raised when a degree leaves the packable range; callers fall back to
/// exact arithmetic.
fn overflow() -> Error {
    Error::ResourceCeiling("degree exceeds the packed-monomial range".into())
}

impl ModPoly {
    fn from_int(p: &IntPoly, packing: Packing) -> Result<ModPoly> {
        let mut terms = Vec::with_capacity(p.terms.len());
        for (m, c) in &p.terms {
            let c = reduce_bigint(c);
            if c != 0 {
                terms.push((packing.pack(m).ok_or_else(overflow)?, c));
            }
        }
        terms.sort_unstable();
        Ok(ModPoly::from_terms(packing, terms))
    }

    fn from_terms(packing: Packing, terms: Vec<(u64, u64)>) -> ModPoly {
        let lead = match terms.last() {
            Some(&(k, _)) => packing.unpack(k),
            None => Monomial::one(packing.nvars),
        };
        ModPoly { packing, lead, terms }
    }

    fn lc(&self) -> u64 {
        self.terms.last().expect("nonzero").1
    }

    fn lead_key(&self) -> u64 {
        self.terms.last().expect("nonzero").0
    }
}

impl WorkPoly for ModPoly {
    fn lm(&self) -> &Monomial {
        &self.lead
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalize(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let s = inv(self.lc());
        for t in &mut self.terms {
            t.1 = mul(t.1, s);
        }
    }

    /// Both inputs are monic. The degree check happens here, so every later
    /// product of packed keys stays in range.
    fn s_poly(f: &Self, g: &Self, _order: MonomialOrder) -> Self {
        let pk = f.packing;
        let lcm = f.lead.lcm(&g.lead);
        if lcm.degree() > MAX_DEGREE {
            // an S-polynomial of a too-high degree: mark it with an
            // impossible key so reduction reports the overflow
            return ModPoly {
                packing: pk,
                lead: lcm,
                terms: vec![(u64::MAX, 1)],
            };
        }
        let l = pk.pack(&lcm).expect("degree checked");
        let uf = pk.quotient(f.lead_key(), l);
        let ug = pk.quotient(g.lead_key(), l);
        let mut acc = KeyMap::default();
        for &(k, c) in &f.terms[..f.terms.len() - 1] {
            *acc.entry(pk.mul(k, uf)).or_insert(0) = c;
        }
        for &(k, c) in &g.terms[..g.terms.len() - 1] {
            let e = acc.entry(pk.mul(k, ug)).or_insert(0);
            *e = sub(*e, c);
        }
        let mut terms: Vec<(u64, u64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_unstable();
        ModPoly::from_terms(pk, terms)
    }

    fn reduce_full(f: Self, reducers: &[&Self], _order: MonomialOrder, cfg: &GroebnerConfig) -> Result<Self> {
        let pk = f.packing;
        if f.terms.last().is_some_and(|&(k, _)| k == u64::MAX) {
            return Err(overflow());
        }
        let leads: Vec<u64> = reducers.iter().map(|g| g.lead_key()).collect();
        // sparse accumulator plus a max-heap of its keys, one heap entry per key
        let mut acc = KeyMap::default();
        acc.reserve(f.terms.len() * 4);
        let mut heap: BinaryHeap<u64> = BinaryHeap::with_capacity(f.terms.len() * 4);
        for &(k, c) in &f.terms {
            heap.push(k);
            acc.insert(k, c);
        }
        let mut rem: Vec<(u64, u64)> = Vec::new();
        while let Some(m) = heap.pop() {
            let c = acc.remove(&m).expect("heap and accumulator agree");
            if c == 0 {
                continue;
            }
            let Some(r) = leads.iter().position(|&l| pk.divides(l, m)) else {
                rem.push((m, c));
                continue;
            };
            let g = reducers[r];
            let q = pk.quotient(leads[r], m);
            // reducers are monic
            for &(t, tc) in &g.terms[..g.terms.len() - 1] {
                let mt = pk.mul(t, q);
                let d = mul(c, tc);
                match acc.get_mut(&mt) {
                    Some(v) => *v = sub(*v, d),
                    None => {
                        heap.push(mt);
                        acc.insert(mt, sub(0, d));
                    }
                }
            }
            if acc.len() > cfg.max_support {
                return Err(Error::ResourceCeiling(format!(
                    "intermediate polynomial with {} terms exceeds the support cap of {}",
                    acc.len(),
                    cfg.max_support
                )));
            }
        }
        rem.reverse();
        Ok(ModPoly::from_terms(pk, rem))
    }
}

/// Minimal generators of the degrevlex initial ideal of the reduction mod `p`
/// of the ideal generated by `gens`, each first scaled to a primitive integer
/// polynomial. `None` when the ring or degrees are outside the packable range.
pub(crate) fn leading_monomials_mod_p(
    gens: &[Polynomial],
    nvars: usize,
    cfg: &GroebnerConfig,
) -> Result<Option<Vec<Monomial>>> {
    if nvars > MAX_VARS {
        return Ok(None);
    }
    let order = MonomialOrder::DegRevLex;
    let packing = Packing::new(nvars);
    let mut work = Vec::with_capacity(gens.len());
    for g in gens {
        match ModPoly::from_int(&IntPoly::from_poly(g, order).0, packing) {
            Ok(p) => work.push(p),
            Err(_) => return Ok(None),
        }
    }
    match Engine::run_on(work, order, cfg) {
        Ok(engine) => Ok(Some(engine.active_basis().iter().map(|p| p.lm().clone()).collect())),
        Err(Error::ResourceCeiling(msg)) if msg.starts_with("degree exceeds") => Ok(None),
        Err(e) => Err(e),
    }
}
