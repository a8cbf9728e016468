use proptest::prelude::*;

use symcert_core::groebner::{groebner_basis, ideal_equal, ideal_membership, krull_dimension};
use symcert_core::primecert::is_regular_sequence;
use symcert_core::scan::{scan_with, ScanKind, ScanRequest};
use symcert_core::symmetric::expand_generator_list;
use symcert_core::{
    Execution, GroebnerConfig, IdealSpec, MonomialOrder, PolyRingContext, Polynomial,
};

fn ideal(n: usize, gens: &[String]) -> IdealSpec {
    let ctx = PolyRingContext::new(n).unwrap();
    IdealSpec::new(ctx.clone(), expand_generator_list(&gens.join(","), &ctx).unwrap()).unwrap()
}

/// `p_a`, `h_a` or `e_a` with `a <= 4`, skipping `e_a` with `a > n` (zero).
fn family(n: usize) -> impl Strategy<Value = String> {
    (prop::sample::select(vec!['p', 'h', 'e']), 1u32..=4)
        .prop_filter("e_a vanishes for a > n", move |(f, a)| *f != 'e' || *a as usize <= n)
        .prop_map(|(f, a)| format!("{f}{a}"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_reduce_to_zero(
        (n, gens) in (2usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(family(n), 1..=3))),
    ) {
        let i = ideal(n, &gens);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let gb = groebner_basis(&i, order).unwrap();
            prop_assert!(gb.verify_s_pairs().unwrap());
            for g in i.generators() {
                prop_assert!(gb.normal_form(g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent(gens in prop::collection::vec(family(3), 1..=2), f in family(3)) {
        let i = ideal(3, &gens);
        let ctx = PolyRingContext::new(3).unwrap();
        let p = expand_generator_list(&f, &ctx).unwrap().remove(0);
        let gb = groebner_basis(&i, MonomialOrder::DegRevLex).unwrap();
        let nf = gb.normal_form(&p).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(ideal_membership(&p.sub(&nf).unwrap(), &i).unwrap());
    }

    #[test]
    fn permuting_variables_or_generators_preserves_the_ideal(
        gens in prop::collection::vec(family(3), 1..=3),
        extra in "x[1-3]\\^[1-3]",
        var_perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        seed in any::<u64>(),
    ) {
        // one non-symmetric generator so the variable permutation matters
        let mut gens = gens;
        gens.push(extra);
        let i = ideal(3, &gens);
        let mut gen_perm: Vec<usize> = (0..gens.len()).collect();
        gen_perm.rotate_left(seed as usize % gens.len());
        prop_assert!(ideal_equal(&i, &i.permuted(&gen_perm)).unwrap());

        let renamed: Vec<Polynomial> =
            i.generators().iter().map(|g| g.permute_vars(&var_perm)).collect();
        let j = IdealSpec::new(i.ctx().clone(), renamed).unwrap();
        prop_assert_eq!(krull_dimension(&i).unwrap().height, krull_dimension(&j).unwrap().height);
    }

    #[test]
    fn regular_sequences_have_full_height(gens in prop::collection::vec(family(3), 1..=3)) {
        let i = ideal(3, &gens);
        let height = krull_dimension(&i).unwrap().height;
        prop_assert_eq!(is_regular_sequence(&i).unwrap(), height == i.len());
    }

    #[test]
    fn generator_order_does_not_matter(gens in prop::collection::vec(family(3), 2..=3)) {
        let mut rev = gens.clone();
        rev.reverse();
        let a = groebner_basis(&ideal(3, &gens), MonomialOrder::DegRevLex).unwrap();
        let b = groebner_basis(&ideal(3, &rev), MonomialOrder::DegRevLex).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
    }
}

#[test]
fn sequential_and_parallel_scans_agree() {
    let cfg = GroebnerConfig::default();
    let none = Default::default();
    for kind in [ScanKind::Ckw3, ScanKind::PabRegularity, ScanKind::H1Even] {
        let req = ScanRequest::new(kind, 5);
        let seq = scan_with(req, Execution::Sequential, &cfg, &none, &|_| {}).unwrap();
        let par = scan_with(req, Execution::Parallel, &cfg, &none, &|_| {}).unwrap();
        assert_eq!(seq.rows, par.rows);
    }
}

#[test]
fn zero_polynomial_is_in_every_ideal() {
    let i = ideal(3, &["p2".into()]);
    assert!(ideal_membership(&Polynomial::zero(3), &i).unwrap());
}
