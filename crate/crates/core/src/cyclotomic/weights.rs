//! Weight sets `W(m, k)`: the sizes `n` for which some multiset of `n`
//! `m`-th roots of unity has vanishing sum of `k`-th powers.
//!
//! The `k`-th powers of the `m`-th roots are exactly the `m'`-th roots,
//! `m' = m / gcd(m, k)`, so every query is answered at modulus `m'` with
//! `k = 1`. Brute force enumerates multisets as non-decreasing exponent
//! sequences starting at 0 (a vanishing sum stays vanishing after rotation)
//! and keeps the running sum exactly in `Z[x]/Φ_m'`.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::TAU;

use num_integer::Integer;
use serde::Serialize;

use super::{cyclotomic_poly, div_rem_monic, prime_divisors, smallest_prime};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Node budget for one enumeration query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumConfig {
    pub max_nodes: u64,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_nodes: 200_000_000,
        }
    }
}

/// A vanishing multiset: `Σ ζ_m^(k e) = 0` over `exponents`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub weight: u64,
    pub exponents: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub m: u64,
    pub k: u64,
    pub bound: u64,
    /// `m / gcd(m, k)`
    pub reduced_modulus: u64,
    pub weights_bruteforce: Vec<u64>,
    /// `N q_1 + ... + N q_r` over the primes `q_i` dividing the reduced modulus.
    pub weights_closedform: Vec<u64>,
    pub agreement: bool,
    /// One witness per nonzero weight found.
    pub witnesses: Vec<Witness>,
    pub nodes_visited: u64,
}

/// Exhaustive search state at a fixed modulus.
struct Searcher {
    m: u64,
    /// `x^e mod Φ_m` for `e < m`
    reps: Vec<Vec<i64>>,
    /// `unit[e][c]` is `ζ^(j_c e)` for the conjugates `ζ -> ζ^(j_c)`, one per
    /// complex-conjugate pair of embeddings
    unit: Vec<Vec<(f64, f64)>>,
    budget: u64,
    nodes: u64,
}

/// Slack on the floating-point pruning bound; the bound only discards
/// branches whose partial sum is farther from 0 than the remaining roots can
/// reach, so a generous slack keeps it sound.
const PRUNE_SLACK: f64 = 1e-6;

impl Searcher {
    fn new(m: u64, budget: u64) -> Result<Searcher> {
        let phi = cyclotomic_poly(m)?;
        let deg = phi.len() - 1;
        let mut reps = Vec::with_capacity(m as usize);
        for e in 0..m as usize {
            let mut x = vec![0i64; e + 1];
            x[e] = 1;
            let (_, mut r) = div_rem_monic(&x, &phi)?;
            r.resize(deg, 0);
            reps.push(r);
        }
        let conj: Vec<u64> = (1..=m.div_ceil(2).max(1))
            .filter(|j| j.gcd(&m) == 1)
            .collect();
        let unit = (0..m)
            .map(|e| {
                conj.iter()
                    .map(|&j| {
                        let t = TAU * ((j * e) % m) as f64 / m as f64;
                        (t.cos(), t.sin())
                    })
                    .collect()
            })
            .collect();
        Ok(Searcher {
            m,
            reps,
            unit,
            budget,
            nodes: 0,
        })
    }

    /// A vanishing multiset of size `n` with smallest exponent 0, if any.
    fn find(&mut self, n: u64) -> Result<Option<Vec<u64>>> {
        if n == 0 {
            return Ok(Some(vec![]));
        }
        let mut seq = vec![0u64];
        let sum = self.reps[0].clone();
        let f = self.unit[0].clone();
        if self.dfs(n, &mut seq, sum, f)? {
            Ok(Some(seq))
        } else {
            Ok(None)
        }
    }

    /// `f` holds the partial sum under every tracked embedding. A branch is
    /// cut when some embedding of the partial sum lies farther from 0 than
    /// the remaining roots can reach.
    fn dfs(&mut self, n: u64, seq: &mut Vec<u64>, sum: Vec<i64>, f: Vec<(f64, f64)>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceCeiling(format!(
                "enumeration budget of {} nodes exhausted",
                self.budget
            )));
        }
        if seq.len() as u64 == n {
            return Ok(sum.iter().all(|&c| c == 0));
        }
        let remaining = (n - seq.len() as u64 - 1) as f64;
        let start = *seq.last().expect("nonempty");
        let limit = (remaining + PRUNE_SLACK) * (remaining + PRUNE_SLACK);
        for e in start..self.m {
            let g: Vec<(f64, f64)> = f
                .iter()
                .zip(&self.unit[e as usize])
                .map(|(a, u)| (a.0 + u.0, a.1 + u.1))
                .collect();
            if g.iter().any(|z| z.0 * z.0 + z.1 * z.1 > limit) {
                continue;
            }
            let next: Vec<i64> = sum
                .iter()
                .zip(&self.reps[e as usize])
                .map(|(a, b)| a + b)
                .collect();
            seq.push(e);
            if self.dfs(n, seq, next, g)? {
                return Ok(true);
            }
            seq.pop();
        }
        Ok(false)
    }
}

/// `N q_1 + ... + N q_r` intersected with `[0, bound]`, for the primes
/// dividing `m`.
pub fn lam_leung_weights(m: u64, bound: u64) -> Vec<u64> {
    let primes = prime_divisors(m);
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for w in 1..=bound as usize {
        reach[w] = primes.iter().any(|&q| w >= q as usize && reach[w - q as usize]);
    }
    (0..=bound).filter(|&w| reach[w as usize]).collect()
}

pub fn weight_set(m: u64, k: u64, bound: u64) -> Result<WeightReport> {
    weight_set_with(m, k, bound, &EnumConfig::default())
}

/// Weights up to `bound` by exhaustive search, compared with the closed form.
pub fn weight_set_with(m: u64, k: u64, bound: u64, cfg: &EnumConfig) -> Result<WeightReport> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument("m and k must be positive".into()));
    }
    let reduced = m / m.gcd(&k);
    let mut searcher = Searcher::new(reduced, cfg.max_nodes)?;
    let mut weights = Vec::new();
    let mut witnesses = Vec::new();
    for n in 0..=bound {
        if let Some(seq) = searcher.find(n)? {
            weights.push(n);
            if n > 0 {
                witnesses.push(Witness {
                    weight: n,
                    exponents: seq,
                });
            }
        }
    }
    let closed = lam_leung_weights(reduced, bound);
    Ok(WeightReport {
        m,
        k,
        bound,
        reduced_modulus: reduced,
        agreement: weights == closed,
        weights_bruteforce: weights,
        weights_closedform: closed,
        witnesses,
        nodes_visited: searcher.nodes,
    })
}

/// True when the smallest prime factor of `m` exceeds `max(n, k)`; then no
/// `n` of the `k`-th powers of `m`-th roots of unity sum to zero.
pub fn no_vanish_guarantee(m: u64, n: u64, k: u64) -> Result<bool> {
    if m < 2 || n < 1 || k < 1 {
        return Err(Error::InvalidArgument("need m >= 2, n >= 1, k >= 1".into()));
    }
    Ok(smallest_prime(m) > n.max(k))
}

/// Outcome of checking the guarantee against exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub max_m: u64,
    pub max_k: u64,
    pub max_n: u64,
    /// `(m, n, k)` triples where the guarantee applies.
    pub guaranteed_cases: u64,
    /// Distinct `(m', n)` enumerations performed.
    pub enumerations: u64,
    pub counterexamples: Vec<Witness>,
    pub counterexample_cases: Vec<(u64, u64, u64)>,
}

/// For every `2 <= m <= max_m`, `1 <= k <= max_k`, `1 <= n <= max_n` with the
/// guarantee in force, searches all multisets of size `n` for a vanishing sum.
pub fn soundness_sweep(
    max_m: u64,
    max_k: u64,
    max_n: u64,
    exec: Execution,
    cfg: &EnumConfig,
) -> Result<SoundnessReport> {
    let mut cases = Vec::new();
    let mut jobs: BTreeSet<(u64, u64)> = BTreeSet::new();
    for m in 2..=max_m {
        for k in 1..=max_k {
            for n in 1..=max_n {
                if no_vanish_guarantee(m, n, k)? {
                    let reduced = m / m.gcd(&k);
                    cases.push((m, n, k, reduced));
                    jobs.insert((reduced, n));
                }
            }
        }
    }
    let jobs: Vec<(u64, u64)> = jobs.into_iter().collect();
    let results = exec.map_ref(&jobs, |&(reduced, n)| -> Result<Option<Vec<u64>>> {
        Searcher::new(reduced, cfg.max_nodes)?.find(n)
    });
    let mut found: HashMap<(u64, u64), Option<Vec<u64>>> = HashMap::new();
    for (job, r) in jobs.iter().zip(results) {
        found.insert(*job, r?);
    }
    let mut counterexamples = Vec::new();
    let mut counterexample_cases = Vec::new();
    for &(m, n, k, reduced) in &cases {
        if let Some(Some(seq)) = found.get(&(reduced, n)) {
            counterexample_cases.push((m, n, k));
            counterexamples.push(Witness {
                weight: n,
                exponents: seq.clone(),
            });
        }
    }
    Ok(SoundnessReport {
        max_m,
        max_k,
        max_n,
        guaranteed_cases: cases.len() as u64,
        enumerations: jobs.len() as u64,
        counterexamples,
        counterexample_cases,
    })
}
