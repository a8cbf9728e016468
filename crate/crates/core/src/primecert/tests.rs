use proptest::prelude::*;

use super::*;
use crate::groebner::{krull_dimension, radical_is_irrelevant_maximal};
use crate::poly::{parse_polynomial, Monomial};
use crate::symmetric::{complete_homogeneous, elementary, expand_generator_list, power_sum};

fn ctx(n: usize) -> PolyRingContext {
    PolyRingContext::new(n).unwrap()
}

fn ideal(n: usize, gens: &str) -> IdealSpec {
    let c = ctx(n);
    IdealSpec::new(c.clone(), expand_generator_list(gens, &c).unwrap()).unwrap()
}

#[test]
fn jacobian_of_power_sums_normalizes_degrees() {
    let j = jacobian(&ideal(3, "p2, p5"), true);
    assert!(j.scalar_normalized());
    assert_eq!((j.nrows(), j.ncols()), (2, 3));
    for col in 0..3 {
        assert_eq!(j.entry(0, col), &Polynomial::monomial(Monomial::var_power(3, col, 1)));
        assert_eq!(j.entry(1, col), &Polynomial::monomial(Monomial::var_power(3, col, 4)));
    }
    let raw = jacobian(&ideal(3, "p2, p5"), false);
    assert_eq!(raw.entry(1, 2), &parse_polynomial("5*x3^4", &ctx(3)).unwrap());
}

#[test]
fn jacobian_of_single_generator() {
    let c = ctx(3);
    let f = parse_polynomial("x1^2*x2 + x3^3", &c).unwrap();
    let j = jacobian(&IdealSpec::new(c.clone(), vec![f.clone()]).unwrap(), false);
    assert_eq!(j.nrows(), 1);
    for v in 0..3 {
        assert_eq!(j.entry(0, v), &f.partial_derivative(v).unwrap());
    }
}

#[test]
fn jacobian_of_h1_h4() {
    let j = jacobian(&ideal(4, "h1, h4"), true);
    let h4 = complete_homogeneous(&ctx(4), 4).unwrap();
    for v in 0..4 {
        assert_eq!(j.entry(0, v), &Polynomial::one(4));
        let d = h4.partial_derivative(v).unwrap();
        assert_eq!(j.entry(1, v).normalized(), d.normalized());
    }
}

#[test]
fn minors_of_power_sum_pair_match_closed_form() {
    for n in 2..=5usize {
        let c = ctx(n);
        for a in 1..=5u32 {
            for b in a + 1..=6u32 {
                let i = IdealSpec::new(c.clone(), vec![power_sum(&c, a).unwrap(), power_sum(&c, b).unwrap()]).unwrap();
                let got = minor_ideal(&jacobian(&i, true), 2).unwrap();
                let mut want = Vec::new();
                for x in 0..n {
                    for y in x + 1..n {
                        let xi = Polynomial::var(n, x).unwrap();
                        let xj = Polynomial::var(n, y).unwrap();
                        let f = xi
                            .pow(a - 1)
                            .unwrap()
                            .mul(&xj.pow(a - 1).unwrap())
                            .unwrap()
                            .mul(&xj.pow(b - a).unwrap().sub(&xi.pow(b - a).unwrap()).unwrap())
                            .unwrap();
                        want.push(f.normalized());
                    }
                }
                assert_eq!(got.generators(), &want[..], "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn minors_of_h1_h4_are_derivative_differences() {
    let c = ctx(4);
    let h4 = complete_homogeneous(&c, 4).unwrap();
    let got = minor_ideal(&jacobian(&ideal(4, "h1, h4"), true), 2).unwrap();
    assert_eq!(got.len(), 6);
    for x in 0..4 {
        for y in x + 1..4 {
            let d = h4
                .partial_derivative(y)
                .unwrap()
                .sub(&h4.partial_derivative(x).unwrap())
                .unwrap()
                .normalized();
            assert!(got.generators().contains(&d));
        }
    }
}

#[test]
fn duplicate_rows_give_empty_minor_ideal() {
    let c = ctx(3);
    let f = power_sum(&c, 2).unwrap();
    let i = IdealSpec::new(c, vec![f.clone(), f.scale(&crate::poly::Coefficient::from_int(3))]).unwrap();
    let m = minor_ideal(&jacobian(&i, true), 2).unwrap();
    assert!(m.is_empty());
    assert!(minor_ideal(&jacobian(&i, true), 3).is_err());
    assert!(minor_ideal(&jacobian(&i, true), 0).is_err());
}

#[test]
fn regular_sequence_examples() {
    assert!(is_regular_sequence(&ideal(3, "p1, p2, p3")).unwrap());
    assert!(!is_regular_sequence(&ideal(3, "p1, p2, p5")).unwrap());
    assert!(!is_regular_sequence(&ideal(4, "h1, h2, h5")).unwrap());
    assert!(is_regular_sequence(&ideal(3, "h1, h4, h6")).unwrap());
    assert!(!is_regular_sequence(&ideal(3, "h1, h4, h7")).unwrap());
    assert!(is_regular_sequence(&IdealSpec::zero(ctx(3))).unwrap());
    assert!(!is_regular_sequence(&ideal(2, "x1, x2, x1 + x2")).unwrap());
    assert!(matches!(
        is_regular_sequence(&ideal(2, "x1 + 1")),
        Err(Error::NotHomogeneous(1))
    ));
}

#[test]
fn precheck_examples() {
    let c = arithmetic_precheck(4, 2, 9).unwrap();
    assert_eq!((c.n0, c.q1, c.condition_met), (7, Some(7), true));
    let c = arithmetic_precheck(4, 2, 4).unwrap();
    assert_eq!((c.n0, c.q1, c.condition_met), (2, Some(2), false));
    let c = arithmetic_precheck(5, 1, 12).unwrap();
    assert_eq!((c.n0, c.q1, c.condition_met), (11, Some(11), true));
    let c = arithmetic_precheck(4, 3, 4).unwrap();
    assert_eq!((c.q1, c.condition_met), (None, false));
    let c = arithmetic_precheck(3, 5, 14).unwrap();
    assert_eq!((c.q1, c.condition_met), (Some(3), false));
    assert!(arithmetic_precheck(4, 3, 3).is_err());
    assert!(arithmetic_precheck(4, 0, 3).is_err());
}

#[test]
fn certificate_examples() {
    let c = certify_prime(&ideal(4, "h1, h4")).unwrap();
    assert_eq!(c.verdict, Verdict::Prime);
    assert_eq!((c.height_i, c.minor_ideal_size), (2, 6));
    assert!(c.height_i_plus_minors >= 4);
    assert_eq!(c.ground_field_note, GROUND_FIELD_NOTE);

    let c = certify_prime(&ideal(4, "p2, p9")).unwrap();
    assert_eq!(c.verdict, Verdict::Prime);

    let c = certify_prime(&ideal(3, "p1, p2")).unwrap();
    assert_eq!(c.verdict, Verdict::Inconclusive);
    assert!(c.radical_irrelevant);
    assert_eq!(c.height_i_plus_minors, 3);

    let c = certify_prime(&ideal(3, "p1, p2, p5")).unwrap();
    assert_eq!(c.verdict, Verdict::NotRegularSequence);
    assert!(c.height_i < c.generator_count);

    let c = certify_prime(&IdealSpec::zero(ctx(2))).unwrap();
    assert_eq!(c.verdict, Verdict::Prime);
    assert_eq!(c.height_i_plus_minors, 3);

    assert!(certify_prime(&ideal(2, "x1^2 + x2")).is_err());
}

#[test]
fn reducible_hypersurface_is_not_certified() {
    let c = certify_prime(&ideal(3, "x1*x2")).unwrap();
    assert_eq!(c.verdict, Verdict::Inconclusive);
    let c = certify_prime(&ideal(3, "x1^2")).unwrap();
    assert_eq!(c.verdict, Verdict::Inconclusive);
    let c = certify_prime(&ideal(3, "x1^2 + x2^2 + x3^2")).unwrap();
    assert_eq!(c.verdict, Verdict::Prime);
}

#[test]
fn certificates_replay() {
    for gens in ["h1, h4", "p2, p9", "p1, p2", "p1, p2, p5", "e2"] {
        let n = if gens == "p1, p2" || gens == "p1, p2, p5" { 3 } else { 4 };
        let c = certify_prime(&ideal(n, gens)).unwrap();
        assert!(c.replay(&GroebnerConfig::default()).unwrap(), "{gens}");
    }
}

#[test]
fn verdict_ignores_generator_order() {
    for (n, gens) in [(4, "h1, h4"), (3, "p1, p2"), (4, "p3, p1"), (3, "h2, h3, h5")] {
        let i = ideal(n, gens);
        let base = certify_prime(&i).unwrap();
        let k = i.len();
        let rev: Vec<usize> = (0..k).rev().collect();
        let other = certify_prime(&i.permuted(&rev)).unwrap();
        assert_eq!(base.verdict, other.verdict, "{gens}");
        assert_eq!(base.height_i_plus_minors, other.height_i_plus_minors);
    }
}

#[test]
fn combine_examples() {
    let a = certify_prime(&ideal(4, "h1, h4")).unwrap();
    let b = certify_prime(&ideal(4, "p2, p9")).unwrap();
    let c = combine_disjoint_primes(&a, &b).unwrap();
    assert_eq!(c.verdict, Verdict::Prime);
    assert_eq!(c.ideal.ring_dim(), 8);
    assert_eq!((c.generator_count, c.height_i), (4, 4));
    assert!(c.height_i_plus_minors >= c.height_i + 2);
    assert_eq!(c.ideal.ctx().names()[4], "y1");

    let z = certify_prime(&IdealSpec::zero(ctx(2))).unwrap();
    let c = combine_disjoint_primes(&a, &z).unwrap();
    assert_eq!(c.verdict, Verdict::Prime);
    assert_eq!(c.height_i_plus_minors, a.height_i_plus_minors);

    let bad = certify_prime(&ideal(3, "p1, p2")).unwrap();
    assert!(matches!(combine_disjoint_primes(&bad, &a), Err(Error::Precondition(_))));
}

#[test]
fn combined_heights_match_recomputation() {
    let a = certify_prime(&ideal(3, "x1^2 + x2^2 + x3^2")).unwrap();
    let b = certify_prime(&ideal(4, "h1, h4")).unwrap();
    let c = combine_disjoint_primes(&a, &b).unwrap();
    let direct = certify_prime(&c.ideal).unwrap();
    assert_eq!(direct.height_i, c.height_i);
    assert_eq!(direct.height_i_plus_minors, c.height_i_plus_minors);
    assert_eq!(direct.verdict, Verdict::Prime);
}

/// Jacobian ideal (all first partials) of `f`.
fn gradient_ideal(f: &Polynomial, n: usize) -> IdealSpec {
    let i = IdealSpec::new(ctx(n), vec![f.clone()]).unwrap();
    minor_ideal(&jacobian(&i, true), 1).unwrap()
}

#[test]
fn gradient_ideals_are_complete_intersections() {
    for n in 3..=4usize {
        let c = ctx(n);
        for a in 2..=4u32 {
            for f in [complete_homogeneous(&c, a).unwrap(), power_sum(&c, a).unwrap()] {
                let g = gradient_ideal(&f, n);
                assert_eq!(g.len(), n);
                assert_eq!(krull_dimension(&g).unwrap().height, n);
                assert!(radical_is_irrelevant_maximal(&g).unwrap());
            }
        }
        let g = gradient_ideal(&elementary(&c, 2).unwrap(), n);
        assert_eq!(krull_dimension(&g).unwrap().height, n);
    }
}

#[test]
fn elementary_gradients_degenerate_from_degree_three() {
    // every partial of e_a with a >= 3 vanishes on the coordinate axes
    let n = 4;
    let e3 = elementary(&ctx(n), 3).unwrap();
    let g = gradient_ideal(&e3, n);
    assert_eq!(krull_dimension(&g).unwrap().height, n - 1);
    assert!(!radical_is_irrelevant_maximal(&g).unwrap());
    // vanishing on the x1-axis: no term is a power of x1 alone
    for d in g.generators() {
        assert!(d.terms().iter().all(|(m, _)| m.support().any(|v| v != 0)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn regularity_matches_generator_order(
        kinds in prop::collection::vec((0usize..3, 1u32..5), 1..=3),
        n in 2usize..=3,
    ) {
        let c = ctx(n);
        let gens: Vec<_> = kinds
            .iter()
            .map(|&(k, a)| match k {
                0 => power_sum(&c, a).unwrap(),
                1 => complete_homogeneous(&c, a).unwrap(),
                _ => elementary(&c, a.min(n as u32)).unwrap(),
            })
            .collect();
        let i = IdealSpec::new(c, gens).unwrap();
        let rev: Vec<usize> = (0..i.len()).rev().collect();
        prop_assert_eq!(
            is_regular_sequence(&i).unwrap(),
            is_regular_sequence(&i.permuted(&rev)).unwrap()
        );
        let v1 = certify_prime(&i).unwrap().verdict;
        let v2 = certify_prime(&i.permuted(&rev)).unwrap().verdict;
        prop_assert_eq!(v1, v2);
    }
}

#[test]
fn arithmetic_hypothesis_instances_are_certified() {
    let mut cases = Vec::new();
    for n in 4..=5u64 {
        for a in 1..=3u64 {
            for b in a + 1..=12u64 {
                if arithmetic_precheck(n, a, b).unwrap().condition_met {
                    cases.push((n as usize, a as u32, b as u32));
                }
            }
        }
    }
    assert!(cases.contains(&(4, 2, 9)) && cases.contains(&(5, 1, 12)));
    let verdicts = crate::Execution::Parallel.map(cases.clone(), |(n, a, b)| {
        let c = ctx(n);
        let i = IdealSpec::new(c.clone(), vec![power_sum(&c, a).unwrap(), power_sum(&c, b).unwrap()]).unwrap();
        certify_prime(&i).unwrap().verdict
    });
    for (case, v) in cases.iter().zip(verdicts) {
        assert_eq!(v, Verdict::Prime, "{case:?}");
    }
}
