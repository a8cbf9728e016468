use proptest::prelude::*;

use super::*;
use crate::groebner::initial_ideal;
use crate::poly::{parse_polynomial, PolyRingContext};
use crate::symmetric::complete_homogeneous;

fn ideal(n: usize, gens: &[&str]) -> IdealSpec {
    let ctx = PolyRingContext::new(n).unwrap();
    let gens = gens.iter().map(|g| parse_polynomial(g, &ctx).unwrap()).collect();
    IdealSpec::new(ctx, gens).unwrap()
}

fn h_ideal(n: usize, degrees: &[u32]) -> IdealSpec {
    let ctx = PolyRingContext::new(n).unwrap();
    let gens = degrees.iter().map(|&a| complete_homogeneous(&ctx, a).unwrap()).collect();
    IdealSpec::new(ctx, gens).unwrap()
}

fn monomial_ci(exps: &[u32]) -> IdealSpec {
    let n = exps.len();
    let ctx = PolyRingContext::new(n).unwrap();
    let gens = exps
        .iter()
        .enumerate()
        .map(|(i, &a)| Polynomial::monomial(Monomial::var_power(n, i, a)))
        .collect();
    IdealSpec::new(ctx, gens).unwrap()
}

/// Coefficients of `prod (1 + t + ... + t^(a_i - 1))`.
fn box_series(exps: &[u32]) -> Vec<usize> {
    let mut acc = vec![1usize];
    for &a in exps {
        let mut next = vec![0usize; acc.len() + a as usize - 1];
        for (i, c) in acc.iter().enumerate() {
            for j in 0..a as usize {
                next[i + j] += c;
            }
        }
        acc = next;
    }
    acc
}

fn stanley() -> IdealSpec {
    ideal(3, &["x1^2", "x2^3", "x3^4"])
}

#[test]
fn maximal_ideal_has_trivial_quotient() {
    let a = artinian_presentation(&ideal(3, &["x1", "x2", "x3"])).unwrap();
    assert_eq!(a.hilbert(), vec![1]);
    assert_eq!(a.socle_degree(), 0);
    assert_eq!(a.basis(), vec![Monomial::one(3)]);
}

#[test]
fn stanley_hilbert_function() {
    let a = artinian_presentation(&stanley()).unwrap();
    assert_eq!(a.hilbert(), vec![1, 3, 5, 6, 5, 3, 1]);
    assert_eq!(a.hilbert(), box_series(&[2, 3, 4]));
    assert_eq!(a.dimension(), 24);
    assert_eq!(a.basis().len(), 24);
}

#[test]
fn complete_homogeneous_ideal_matches_its_degeneration() {
    for a0 in [2u32, 3] {
        let i = h_ideal(3, &[a0, a0 + 1, a0 + 2]);
        let hf = artinian_presentation(&i).unwrap().hilbert();
        assert_eq!(hf, box_series(&[a0, a0 + 1, a0 + 2]));
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let init = initial_ideal(&i, order).unwrap();
            assert_eq!(artinian_presentation(&init).unwrap().hilbert(), hf, "a={a0} {order:?}");
        }
    }
}

#[test]
fn presentation_errors() {
    assert_eq!(artinian_presentation(&ideal(3, &["x1", "x2"])).unwrap_err(), Error::NotArtinian);
    assert!(matches!(
        artinian_presentation(&ideal(2, &["x1^2 + x2"])),
        Err(Error::NotHomogeneous(_))
    ));
    assert!(artinian_presentation(&ideal(2, &["1"])).is_err());
}

#[test]
fn two_variable_degree_one_map() {
    let a = artinian_presentation(&ideal(2, &["x1^2", "x2^2"])).unwrap();
    let ell = default_element(2);
    let m = multiplication_matrix(&a, &ell, 0, 1).unwrap();
    assert_eq!(m.len(), 2);
    assert_eq!(m[0].len(), 1);
    assert_eq!(rank(&m), 1);
    assert!(m.iter().all(|r| r[0] == Coefficient::one()));
}

#[test]
fn maps_past_the_socle_have_no_rows() {
    let a = artinian_presentation(&ideal(2, &["x1^2", "x2^2"])).unwrap();
    let m = multiplication_matrix(&a, &default_element(2), 1, 2).unwrap();
    assert!(m.is_empty());
    assert_eq!(rank(&m), 0);
}

#[test]
fn multiplication_matrix_rejects_bad_parameters() {
    let a = artinian_presentation(&stanley()).unwrap();
    let ell = default_element(3);
    assert!(multiplication_matrix(&a, &ell, 7, 1).is_err());
    assert!(multiplication_matrix(&a, &ell, 0, 0).is_err());
    let ctx = PolyRingContext::new(3).unwrap();
    let quad = parse_polynomial("x1^2", &ctx).unwrap();
    assert!(multiplication_matrix(&a, &quad, 0, 1).is_err());
    let mixed = parse_polynomial("x1 + 1", &ctx).unwrap();
    assert!(multiplication_matrix(&a, &mixed, 0, 1).is_err());
    assert!(multiplication_matrix(&a, &default_element(2), 0, 1).is_err());
}

#[test]
fn stanley_maps_have_full_rank() {
    let a = artinian_presentation(&stanley()).unwrap();
    let ell = default_element(3);
    let c = a.socle_degree();
    for i in 0..c {
        for d in 1..=c - i {
            let m = multiplication_matrix(&a, &ell, i, d).unwrap();
            assert_eq!(rank(&m), a.hf(i).min(a.hf(i + d)), "i={i} d={d}");
        }
    }
}

#[test]
fn composed_maps_agree_with_direct_powers() {
    let i = h_ideal(3, &[2, 3, 4]);
    let a = artinian_presentation(&i).unwrap();
    let ctx = PolyRingContext::new(3).unwrap();
    let ell = parse_polynomial("x1 - 2*x2 + 3*x3", &ctx).unwrap();
    let c = a.socle_degree();
    let steps: Vec<RationalMatrix> = (0..c).map(|j| multiplication_matrix(&a, &ell, j, 1).unwrap()).collect();
    for i0 in 0..c {
        let mut m = steps[i0].clone();
        for j in i0 + 1..c {
            m = mat_mul(&steps[j], &m, a.hf(j), a.hf(i0));
            assert_eq!(m, multiplication_matrix(&a, &ell, i0, j + 1 - i0).unwrap());
        }
    }
}

#[test]
fn slp_examples() {
    let r = slp_check(&stanley(), &default_element(3)).unwrap();
    assert!(r.verdict);
    assert!(r.failures.is_empty());
    assert_eq!(r.maps.len(), 21);

    let ctx = PolyRingContext::new(3).unwrap();
    let generic = parse_polynomial("x1 + 2*x2 + 3*x3", &ctx).unwrap();
    let r = slp_check(&h_ideal(3, &[2, 3, 4]), &generic).unwrap();
    assert!(r.verdict, "{:?}", r.failures);

    let ctx = PolyRingContext::new(2).unwrap();
    let r = slp_check(&ideal(2, &["x1", "x2"]), &parse_polynomial("3*x1 - x2", &ctx).unwrap()).unwrap();
    assert!(r.verdict);
    assert!(r.maps.is_empty());
}

#[test]
fn slp_failure_is_reported() {
    // x1 kills x1 and is nilpotent of order 2, so x1^2 fails from degree 0
    let ctx = PolyRingContext::new(2).unwrap();
    let ell = parse_polynomial("x1", &ctx).unwrap();
    let r = slp_check(&ideal(2, &["x1^2", "x2^2"]), &ell).unwrap();
    assert!(!r.verdict);
    assert_eq!(
        r.failures,
        vec![MapRank { i: 0, d: 2, rank: 0, required: 1 }]
    );
    for m in &r.maps {
        assert!(m.rank <= m.required);
    }
}

#[test]
fn symmetric_element_is_not_lefschetz_for_complete_homogeneous_ideal() {
    // modulo <h2, h3, h4>: e2 = h1^2, e3 = h1^3, and h4 - e1 h3 + e2 h2 - e3 h1 = 0
    // leaves h1^4 in the ideal, so x1 + x2 + x3 is nilpotent of order 4
    let i = h_ideal(3, &[2, 3, 4]);
    let ell = default_element(3);
    let gb = crate::groebner::groebner_basis(&i, MonomialOrder::DegRevLex).unwrap();
    assert!(gb.contains(&ell.pow(4).unwrap()).unwrap());
    let r = slp_check(&i, &ell).unwrap();
    assert!(!r.verdict);
    assert!(r.failures.contains(&MapRank { i: 0, d: 4, rank: 0, required: 1 }));
}

#[test]
fn slp_rejects_nonlinear_element() {
    let ctx = PolyRingContext::new(3).unwrap();
    let q = parse_polynomial("x1*x2", &ctx).unwrap();
    assert!(slp_check(&stanley(), &q).is_err());
    assert_eq!(slp_check(&ideal(3, &["x1"]), &default_element(3)).unwrap_err(), Error::NotArtinian);
}

#[test]
fn rank_drops_along_powers() {
    for i in [stanley(), h_ideal(3, &[2, 3, 4]), h_ideal(3, &[3, 4, 5])] {
        let r = slp_check(&i, &default_element(3)).unwrap();
        for m in &r.maps {
            if let Some(next) = r.maps.iter().find(|x| x.i == m.i && x.d == m.d + 1) {
                assert!(m.rank >= next.rank);
            }
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let i = h_ideal(3, &[3, 4, 5]);
    let cfg = GroebnerConfig::default();
    let ctx = PolyRingContext::new(3).unwrap();
    let ell = parse_polynomial("x1 + 2*x2 + 3*x3", &ctx).unwrap();
    let s = slp_check_with(&i, &ell, Execution::Sequential, &cfg).unwrap();
    let p = slp_check_with(&i, &ell, Execution::Parallel, &cfg).unwrap();
    assert_eq!(s, p);
    assert!(s.verdict);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn monomial_complete_intersection_hilbert(exps in prop::collection::vec(1u32..=5, 1..=4)) {
        let a = artinian_presentation(&monomial_ci(&exps)).unwrap();
        prop_assert_eq!(a.hilbert(), box_series(&exps));
        prop_assert_eq!(a.hf(0), 1);
        prop_assert!(*a.hilbert().last().unwrap() > 0);
        prop_assert_eq!(a.hf(a.socle_degree() + 1), 0);
    }

    #[test]
    fn slp_ignores_generator_order(perm_seed in 0usize..6, a0 in 2u32..=3) {
        let i = h_ideal(3, &[a0, a0 + 1, a0 + 2]);
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let ell = default_element(3);
        let base = slp_check(&i, &ell).unwrap();
        let other = slp_check(&i.permuted(&perms[perm_seed]), &ell).unwrap();
        prop_assert_eq!(base, other);
    }
}
