use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    groebner_basis_with, has_all_pure_powers, modular_dimension, report_from_leading,
    GroebnerConfig, IdealSpec,
};
use crate::poly::{MonomialOrder, Polynomial};

use super::{jacobian, minor_ideal};

/// Attached verbatim to every certificate.
pub const GROUND_FIELD_NOTE: &str = "computed over Q; height, Krull dimension and \
irrelevant-maximality of a homogeneous ideal defined over Q do not change under extension \
of scalars to C, and graded connectedness uses only the grading, so a Prime verdict holds over C";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Prime,
    Inconclusive,
    NotRegularSequence,
}

/// Every quantity the verdict depends on, so it can be replayed.
#[derive(Debug, Clone, Serialize)]
pub struct PrimalityCertificate {
    pub ideal: IdealSpec,
    pub verdict: Verdict,
    pub generator_count: usize,
    pub height_i: usize,
    pub minor_ideal_size: usize,
    pub height_i_plus_minors: usize,
    pub radical_irrelevant: bool,
    pub ground_field_note: String,
    pub steps: Vec<String>,
}

impl PrimalityCertificate {
    pub fn is_prime(&self) -> bool {
        self.verdict == Verdict::Prime
    }

    /// Recomputes the heights from scratch and checks that they support
    /// the recorded verdict.
    pub fn replay(&self, cfg: &GroebnerConfig) -> Result<bool> {
        let fresh = certify_prime_with(&self.ideal, cfg)?;
        Ok(fresh.verdict == self.verdict
            && fresh.height_i == self.height_i
            && fresh.height_i_plus_minors == self.height_i_plus_minors
            && (self.verdict != Verdict::Prime
                || (self.height_i == self.generator_count
                    && self.height_i_plus_minors >= self.generator_count + 2)))
    }
}

pub fn certify_prime(ideal: &IdealSpec) -> Result<PrimalityCertificate> {
    certify_prime_with(ideal, &GroebnerConfig::default())
}

struct Heights {
    height: usize,
    radical_irrelevant: bool,
    modular: bool,
}

/// Exact height of `ideal`. The reduction mod a large prime is tried first;
/// its height is a lower bound, and it is exact when it reaches `ceiling`
/// (the largest value the height over `Q` can take).
fn heights(ideal: &IdealSpec, ceiling: usize, cfg: &GroebnerConfig) -> Result<Heights> {
    let n = ideal.ring_dim();
    if let Some(r) = modular_dimension(ideal, cfg)? {
        if r.height == ceiling {
            return Ok(Heights {
                height: r.height,
                radical_irrelevant: r.height == n,
                modular: true,
            });
        }
    }
    let gb = groebner_basis_with(ideal, MonomialOrder::DegRevLex, cfg)?;
    let lms = gb.leading_monomials();
    Ok(Heights {
        height: report_from_leading(n, &lms).height,
        radical_irrelevant: has_all_pure_powers(n, &lms),
        modular: false,
    })
}

fn method(h: &Heights) -> &'static str {
    if h.modular {
        " (modulo 2^61 - 1; reduction mod p cannot raise height, and this is the maximum)"
    } else {
        " (exact Gröbner basis over Q)"
    }
}

/// Serre-criterion certificate for a homogeneous ideal `I = <f_1..f_k>`.
///
/// If the generators form a regular sequence, `S/I` is a complete
/// intersection and so satisfies S2. With `J'` the ideal of `k x k` Jacobian
/// minors, `height(I + J') >= k + 2` says the singular locus has codimension
/// at least two in `V(I)`, which is R1. A normal, positively graded ring
/// with degree-0 part a field is a domain, so `I` is prime. When the bound
/// fails nothing is concluded.
pub fn certify_prime_with(ideal: &IdealSpec, cfg: &GroebnerConfig) -> Result<PrimalityCertificate> {
    ideal.check_homogeneous()?;
    let n = ideal.ring_dim();
    let k = ideal.len();
    let mut steps = vec![format!("{k} homogeneous generators in {n} variables")];

    let hi = heights(ideal, k.min(n), cfg)?;
    steps.push(format!("height(I) = {}{}", hi.height, method(&hi)));
    let regular = k <= n && hi.height == k;
    let mut cert = PrimalityCertificate {
        ideal: ideal.clone(),
        verdict: Verdict::NotRegularSequence,
        generator_count: k,
        height_i: hi.height,
        minor_ideal_size: 0,
        height_i_plus_minors: 0,
        radical_irrelevant: false,
        ground_field_note: GROUND_FIELD_NOTE.to_string(),
        steps,
    };
    if !regular {
        cert.steps.push(format!(
            "height(I) != {k} or I is not proper: not a regular sequence"
        ));
        return Ok(cert);
    }
    cert.steps.push("regular sequence: S/I is a complete intersection, hence S2".into());

    let sum = if k == 0 {
        cert.steps.push("k = 0: J' is generated by the empty minor 1".into());
        ideal.extended([Polynomial::one(n)])?
    } else {
        let minors = minor_ideal(&jacobian(ideal, true), k)?;
        cert.minor_ideal_size = minors.len();
        cert.steps.push(format!(
            "J' = ideal of {k}x{k} Jacobian minors, {} distinct nonzero generators",
            minors.len()
        ));
        ideal.extended(minors.generators().iter().cloned())?
    };
    let hs = heights(&sum, n, cfg)?;
    cert.height_i_plus_minors = hs.height;
    cert.radical_irrelevant = hs.radical_irrelevant;
    cert.steps.push(format!("height(I + J') = {}{}", hs.height, method(&hs)));
    cert.steps.push(format!(
        "radical of I + J' is the irrelevant ideal: {}",
        hs.radical_irrelevant
    ));

    if hs.height >= k + 2 {
        cert.verdict = Verdict::Prime;
        cert.steps.push(format!(
            "height(I + J') >= {}: singular locus has codimension >= 2 in V(I), hence R1",
            k + 2
        ));
        cert.steps.push("S/I normal and positively graded, hence a domain: I is prime".into());
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.steps.push(format!(
            "height(I + J') < {}: R1 not established, no conclusion",
            k + 2
        ));
    }
    Ok(cert)
}

/// Certificate for `(I, J)` in the ring on the disjoint union of the two
/// variable sets, given prime certificates for `I` and `J`.
///
/// `V(I, J) = V(I) x V(J)` and the singular locus of a product is
/// `Sing(V(I)) x V(J) ∪ V(I) x Sing(V(J))`, so the combined heights follow
/// from the inputs without a new Gröbner computation.
pub fn combine_disjoint_primes(
    first: &PrimalityCertificate,
    second: &PrimalityCertificate,
) -> Result<PrimalityCertificate> {
    for (name, c) in [("first", first), ("second", second)] {
        if c.verdict != Verdict::Prime {
            return Err(Error::Precondition(format!(
                "{name} certificate has verdict {:?}, expected Prime",
                c.verdict
            )));
        }
    }
    let (n1, n2) = (first.ideal.ring_dim(), second.ideal.ring_dim());
    let n = n1 + n2;
    let ctx = first.ideal.ctx().concat(second.ideal.ctx());
    let mut gens = Vec::with_capacity(first.ideal.len() + second.ideal.len());
    for g in first.ideal.generators() {
        gens.push(g.embed(n, 0)?);
    }
    for g in second.ideal.generators() {
        gens.push(g.embed(n, n1)?);
    }
    let ideal = IdealSpec::new(ctx, gens)?;

    // a singular locus is empty exactly when I + J' is the unit ideal
    let sing1 = (first.height_i_plus_minors <= n1).then_some(first.height_i_plus_minors + second.height_i);
    let sing2 = (second.height_i_plus_minors <= n2).then_some(second.height_i_plus_minors + first.height_i);
    let height_plus = match (sing1, sing2) {
        (None, None) => n + 1,
        (a, b) => a.into_iter().chain(b).min().expect("one side present"),
    };
    let k = first.generator_count + second.generator_count;
    let steps = vec![
        format!(
            "I prime in {n1} variables (height {}), J prime in {n2} variables (height {})",
            first.height_i, second.height_i
        ),
        "disjoint variables: S/(I, J) is the tensor product of the two quotients".into(),
        "a tensor product over an algebraically closed field of finitely generated domains is a domain, so (I, J) is prime".into(),
        format!("height((I, J)) = {}", first.height_i + second.height_i),
        format!("height of the singular-locus ideal = {height_plus} (from the input certificates)"),
    ];
    Ok(PrimalityCertificate {
        ideal,
        verdict: Verdict::Prime,
        generator_count: k,
        height_i: first.height_i + second.height_i,
        // the combined minor ideal is never formed
        minor_ideal_size: 0,
        height_i_plus_minors: height_plus,
        radical_irrelevant: height_plus == n,
        ground_field_note: GROUND_FIELD_NOTE.to_string(),
        steps,
    })
}
