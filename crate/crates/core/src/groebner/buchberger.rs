//! Buchberger's algorithm with normal selection and the Gebauer–Möller
//! installation of the coprime and chain criteria.

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

use super::intpoly::{reduce, s_polynomial, IntPoly};
use super::GroebnerConfig;

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Working polynomial representation the engine runs on.
pub(crate) trait WorkPoly: Clone {
    fn lm(&self) -> &Monomial;
    fn is_zero(&self) -> bool;
    /// Canonical scalar multiple (primitive or monic).
    fn normalize(&mut self);
    fn s_poly(f: &Self, g: &Self, order: MonomialOrder) -> Self;
    /// Full reduction: no term of the result is divisible by a reducer lead.
    fn reduce_full(f: Self, reducers: &[&Self], order: MonomialOrder, cfg: &GroebnerConfig) -> Result<Self>;
}

impl WorkPoly for IntPoly {
    fn lm(&self) -> &Monomial {
        IntPoly::lm(self)
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn normalize(&mut self) {
        self.make_primitive();
    }
    fn s_poly(f: &Self, g: &Self, order: MonomialOrder) -> Self {
        s_polynomial(f, g, order)
    }
    fn reduce_full(f: Self, reducers: &[&Self], order: MonomialOrder, cfg: &GroebnerConfig) -> Result<Self> {
        Ok(reduce(f, reducers, order, cfg)?.remainder)
    }
}

pub(crate) struct Engine<'a, P: WorkPoly> {
    order: MonomialOrder,
    cfg: &'a GroebnerConfig,
    polys: Vec<P>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    spairs_processed: usize,
}

/// Statistics reported alongside a basis.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub spairs_processed: usize,
    pub basis_elements_created: usize,
}

impl<'a, P: WorkPoly> Engine<'a, P> {
    /// Runs Buchberger's algorithm on `gens` to completion.
    pub(crate) fn run_on(gens: Vec<P>, order: MonomialOrder, cfg: &'a GroebnerConfig) -> Result<Self> {
        let mut gens: Vec<P> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        // normal strategy also for the input: smallest leading monomial first
        gens.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        let mut engine = Engine {
            order,
            cfg,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            spairs_processed: 0,
        };
        for g in gens {
            let r = P::reduce_full(g, &engine.reducers(), order, cfg)?;
            if !r.is_zero() {
                engine.insert(r);
            }
        }
        engine.run()?;
        Ok(engine)
    }

    /// Surviving basis elements, ascending by leading monomial. Their leading
    /// monomials minimally generate the initial ideal.
    pub(crate) fn active_basis(&self) -> Vec<P> {
        let mut basis: Vec<P> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p.clone())
            .collect();
        basis.sort_by(|a, b| self.order.cmp(a.lm(), b.lm()));
        basis.dedup_by(|a, b| a.lm() == b.lm());
        basis
    }

    pub(crate) fn stats(&self) -> BuchbergerStats {
        BuchbergerStats {
            spairs_processed: self.spairs_processed,
            basis_elements_created: self.polys.len(),
        }
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.polys.len()).filter(|&k| self.active[k]).collect()
    }

    fn reducers(&self) -> Vec<&P> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Gebauer–Möller update with the new element at index `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let mut candidates: Vec<Pair> = self
            .active_indices()
            .into_iter()
            .map(|g| Pair {
                i: g,
                j: h,
                lcm: self.polys[g].lm().lcm(&lm_h),
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.polys[p.i].lm().is_coprime(&lm_h);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // coprime criterion
        kept.retain(|p| !self.polys[p.i].lm().is_coprime(&lm_h));

        // chain criterion on old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lm_h.divides(&p.lcm) {
                return true;
            }
            let l1 = polys[p.i].lm().lcm(&lm_h);
            let l2 = polys[p.j].lm().lcm(&lm_h);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(kept);

        for k in 0..self.polys.len() {
            if self.active[k] && k != h && lm_h.divides(self.polys[k].lm()) {
                self.active[k] = false;
            }
        }
        self.active[h] = true;

        let order = self.order;
        // descending, so the smallest lcm is popped first; ties broken by indices
        self.pairs.sort_by(|a, b| {
            order
                .cmp(&b.lcm, &a.lcm)
                .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
        });
    }

    fn insert(&mut self, mut p: P) {
        p.normalize();
        self.polys.push(p);
        self.active.push(false);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.pairs.pop() {
            self.spairs_processed += 1;
            if self.spairs_processed > self.cfg.max_spairs {
                return Err(Error::ResourceCeiling(format!(
                    "S-pair budget of {} exhausted",
                    self.cfg.max_spairs
                )));
            }
            let s = P::s_poly(&self.polys[pair.i], &self.polys[pair.j], self.order);
            if s.is_zero() {
                continue;
            }
            let reduced = P::reduce_full(s, &self.reducers(), self.order, self.cfg)?;
            if !reduced.is_zero() {
                self.insert(reduced);
            }
        }
        Ok(())
    }
}

/// Computes the reduced Gröbner basis of `gens` (integer polynomials in
/// `order`). The result is sorted ascending by leading monomial; every element
/// is primitive with positive leading coefficient.
pub(crate) fn reduced_basis(
    gens: Vec<IntPoly>,
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<(Vec<IntPoly>, BuchbergerStats)> {
    let engine = Engine::run_on(gens, order, cfg)?;
    let basis = engine.active_basis();

    // interreduce tails
    let nvars = basis.first().map(|p| p.lm().nvars()).unwrap_or(0);
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&IntPoly> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p)
            .collect();
        let mut tail = basis[k].clone();
        let (head_m, head_c) = tail.terms.pop().expect("nonzero");
        let reduced = reduce(tail, &others, order, cfg)?;
        let tail_nf = reduced.remainder.to_polynomial_scaled(nvars, &reduced.scale);
        let head = Polynomial::from_term(head_m, Coefficient::from_bigint(head_c));
        let full = head.add(&tail_nf)?;
        out.push(IntPoly::from_poly(&full, order).0);
    }
    Ok((out, engine.stats()))
}
