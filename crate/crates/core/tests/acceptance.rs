//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//! Run with `cargo test -p symcert-core --test acceptance`.

use std::time::{Duration, Instant};

use symcert_core::cyclotomic::{soundness_sweep, weight_set, EnumConfig};
use symcert_core::groebner::{
    ideal_equal, ideal_membership, initial_ideal, krull_dimension,
};
use symcert_core::lefschetz::slp_check;
use symcert_core::poly::parse_polynomial;
use symcert_core::primecert::{certify_prime, is_regular_sequence, Verdict};
use symcert_core::scan::{scan, ScanKind, ScanRequest, RowOutcome};
use symcert_core::symmetric::{
    complete_homogeneous, elementary, expand_generator, expand_generator_list,
    newton_identity_defect, power_sum, residue_h_mod_h1h4, residue_p_mod_initial,
    schur_bialternant, schur_jacobi_trudi, NewtonIdentity, Partition,
};
use symcert_core::{
    Coefficient, Execution, IdealSpec, MonomialOrder, PolyRingContext, Polynomial, Result,
};

type Check = std::result::Result<(), String>;

/// Number, name, time limit and body of one criterion.
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn ctx(n: usize) -> PolyRingContext {
    PolyRingContext::new(n).unwrap()
}

fn ideal(n: usize, gens: &str) -> IdealSpec {
    let c = ctx(n);
    IdealSpec::new(c.clone(), expand_generator_list(gens, &c).unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn wrap<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Collects the labels of failing sub-cases so one criterion reports all of them.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check(&mut self, label: impl Into<String>, ok: std::result::Result<bool, String>) {
        match ok {
            Ok(true) => {}
            Ok(false) => self.0.push(label.into()),
            Err(e) => self.0.push(format!("{} ({e})", label.into())),
        }
    }

    fn finish(self) -> Check {
        if self.0.is_empty() {
            Ok(())
        } else {
            Err(format!("failing cases: {}", self.0.join(", ")))
        }
    }
}

fn newton_identities() -> Check {
    let mut f = Failures::default();
    for n in 1..=5 {
        let c = ctx(n);
        for which in [NewtonIdentity::Eq1, NewtonIdentity::Eq2, NewtonIdentity::Eq3] {
            for a in 1..=8 {
                let d = newton_identity_defect(&c, which, a).map(|p| p.is_zero());
                f.check(format!("{which:?} n={n} a={a}"), d.map_err(|e| e.to_string()));
            }
        }
    }
    f.finish()
}

fn derivative_identities() -> Check {
    let mut f = Failures::default();
    for n in 1..=5usize {
        let c = ctx(n);
        let k = |v: i64| Coefficient::from_int(v);
        for a in 1..=6u32 {
            let r = (|| -> Result<bool> {
                let h = |j| complete_homogeneous(&c, j);
                let e = |j| elementary(&c, j);
                let mut ok = true;
                let mut sum_h = Polynomial::zero(n);
                let mut sum_e = Polynomial::zero(n);
                let mut sum_p = Polynomial::zero(n);
                for i in 0..n {
                    let xi = Polynomial::var(n, i)?;
                    let dh = h(a)?.partial_derivative(i)?;
                    let dh_prev = h(a - 1)?.partial_derivative(i)?;
                    ok &= dh == h(a - 1)?.add(&xi.mul(&dh_prev)?)?;
                    let de = e(a)?.partial_derivative(i)?;
                    let de_prev = e(a - 1)?.partial_derivative(i)?;
                    ok &= de == e(a - 1)?.sub(&xi.mul(&de_prev)?)?;
                    sum_h = sum_h.add(&dh)?;
                    sum_e = sum_e.add(&de)?;
                    sum_p = sum_p.add(&power_sum(&c, a)?.partial_derivative(i)?)?;
                }
                ok &= sum_h == h(a - 1)?.scale(&k(n as i64 + a as i64 - 1));
                ok &= sum_e == e(a - 1)?.scale(&k(n as i64 - a as i64 + 1));
                let p_prev = if a >= 2 {
                    power_sum(&c, a - 1)?
                } else {
                    Polynomial::constant(n, k(n as i64))
                };
                ok &= sum_p == p_prev.scale(&k(a as i64));
                Ok(ok)
            })();
            f.check(format!("n={n} a={a}"), wrap(r));
        }
    }
    f.finish()
}

fn member(n: usize, f: &str, gens: &str) -> std::result::Result<bool, String> {
    let p = wrap(expand_generator(f, &ctx(n)))?;
    wrap(ideal_membership(&p, &ideal(n, gens)))
}

fn memberships() -> Check {
    let mut f = Failures::default();
    f.check("p5 in <p1,p2>", member(4, "p5", "p1,p2"));
    f.check("h5 in <h1,h2>", member(4, "h5", "h1,h2"));
    f.check("p10 in <p2,p4>", member(4, "p10", "p2,p4"));
    f.finish()
}

fn ideal_equalities() -> Check {
    let mut f = Failures::default();
    for (n, sets) in [(4, ["p1,p2", "h1,h2", "e1,e2"]), (5, ["p1,p2,p3", "h1,h2,h3", "e1,e2,e3"])] {
        let base = ideal(n, sets[0]);
        for other in &sets[1..] {
            f.check(
                format!("<{}> = <{other}> n={n}", sets[0]),
                wrap(ideal_equal(&base, &ideal(n, other))),
            );
        }
    }
    f.finish()
}

fn primality() -> Check {
    let mut f = Failures::default();
    let cases = [
        (4, "h1,h4", Verdict::Prime),
        (4, "p2,p9", Verdict::Prime),
        (4, "p1,p12", Verdict::Prime),
        (5, "p1,p2,p3", Verdict::Prime),
        (5, "p2,p4,p6", Verdict::Prime),
        (3, "p1,p2", Verdict::Inconclusive),
    ];
    for (n, gens, want) in cases {
        let r = wrap(certify_prime(&ideal(n, gens))).map(|c| c.verdict == want);
        f.check(format!("<{gens}> n={n} -> {want:?}"), r);
    }
    f.finish()
}

fn regularity() -> Check {
    let mut f = Failures::default();
    let cases = [
        (3, "p1,p2,p3", true),
        (3, "p1,p2,p5", false),
        (4, "h1,h2,h5", false),
        (3, "h1,h4,h6", true),
        (3, "h1,h4,h7", false),
    ];
    for (n, gens, want) in cases {
        let r = wrap(is_regular_sequence(&ideal(n, gens))).map(|b| b == want);
        f.check(format!("{gens} n={n} regular={want}"), r);
    }
    f.finish()
}

fn residues() -> Check {
    let mut f = Failures::default();
    let c3 = ctx(3);
    let h1h4 = ideal(3, "h1,h4");
    for c in 1..=12 {
        let r = (|| -> Result<bool> {
            let class = residue_h_mod_h1h4(c)?;
            let diff = complete_homogeneous(&c3, c)?.sub(&class.to_polynomial(&c3)?)?;
            ideal_membership(&diff, &h1h4)
        })();
        f.check(format!("h{c} mod <h1,h4>"), wrap(r));
    }
    for n in [3usize, 4] {
        let c = ctx(n);
        let gens: Vec<String> = (1..n).map(|i| format!("p{i}")).collect();
        let base = ideal(n, &gens.join(","));
        for deg in 1..=12u32 {
            let r = (|| -> Result<bool> {
                let class = residue_p_mod_initial(&c, deg)?;
                let shape = if (deg as usize).is_multiple_of(n) {
                    !class.is_zero() && class.scalar.abs() == Coefficient::from_int(n as i64)
                } else {
                    class.is_zero()
                };
                let diff = power_sum(&c, deg)?.sub(&class.to_polynomial(&c)?)?;
                Ok(shape && ideal_membership(&diff, &base)?)
            })();
            f.check(format!("p{deg} mod <p1..p{}> n={n}", n - 1), wrap(r));
        }
    }
    f.finish()
}

fn weight_sets() -> Check {
    let mut f = Failures::default();
    f.check(
        "weight_set(10,1,10)",
        wrap(weight_set(10, 1, 10)).map(|r| r.weights_bruteforce == [0, 2, 4, 5, 6, 7, 8, 9, 10]),
    );
    for m in [2, 3, 4, 5, 6, 10, 12, 15, 30] {
        let r = wrap(weight_set(m, 1, 12))
            .map(|r| r.agreement && r.weights_bruteforce == r.weights_closedform);
        f.check(format!("closed form m={m}"), r);
    }
    let sweep = wrap(soundness_sweep(30, 6, 8, Execution::default(), &EnumConfig::default()))
        .map(|r| r.counterexamples.is_empty() && r.guaranteed_cases > 0);
    f.check("soundness sweep m<=30 k<=6 n<=8", sweep);
    f.finish()
}

fn schur_identities() -> Check {
    let mut f = Failures::default();
    for n in 1..=4usize {
        let c = ctx(n);
        for size in 0..=6 {
            for lambda in Partition::all_of_size(size, n) {
                let r = (|| -> Result<bool> {
                    Ok(schur_jacobi_trudi(&c, &lambda)? == schur_bialternant(&c, &lambda)?)
                })();
                f.check(format!("{:?} n={n}", lambda.parts()), wrap(r));
            }
        }
    }
    let c3 = ctx(3);
    for l1 in 1..=4u32 {
        let r = (|| -> Result<bool> {
            let s = schur_jacobi_trudi(&c3, &Partition::new(vec![l1, 1, 0])?)?;
            let h = |j| complete_homogeneous(&c3, j);
            Ok(s == h(1)?.mul(&h(l1)?)?.sub(&h(l1 + 1)?)?)
        })();
        f.check(format!("s({l1},1,0) hook relation"), wrap(r));
    }
    f.finish()
}

/// Height of the ideal of partial derivatives of `f`.
fn gradient_height(n: usize, f: &str) -> std::result::Result<usize, String> {
    let c = ctx(n);
    let p = wrap(expand_generator(f, &c))?;
    let partials: Vec<Polynomial> = (0..n)
        .map(|i| p.partial_derivative(i).unwrap())
        .filter(|d| !d.is_zero())
        .collect();
    let j = wrap(IdealSpec::new(c, partials))?;
    Ok(wrap(krull_dimension(&j))?.height)
}

fn smoothness() -> Check {
    let mut f = Failures::default();
    let mut case = |n: usize, gen: String| {
        let r = gradient_height(n, &gen);
        let label = match &r {
            Ok(h) => format!("{gen} n={n} (height {h})"),
            Err(_) => format!("{gen} n={n}"),
        };
        f.check(label, r.map(|h| h == n));
    };
    for n in [3usize, 4] {
        for a in 2..=4 {
            case(n, format!("h{a}"));
            case(n, format!("p{a}"));
        }
        for a in 2..n {
            case(n, format!("e{a}"));
        }
    }
    for a in [3, 4] {
        case(3, format!("d1(h{a})"));
    }
    for l1 in 1..=4 {
        case(3, format!("s[{l1},1,0]"));
    }
    f.finish()
}

fn lefschetz() -> Check {
    let mut f = Failures::default();
    let c3 = ctx(3);
    let ell = parse_polynomial("x1 + x2 + x3", &c3).unwrap();
    let stanley = ideal(3, "x1^2,x2^3,x3^4");
    f.check(
        "<x1^2,x2^3,x3^4> with x1+x2+x3",
        wrap(slp_check(&stanley, &ell)).map(|r| r.verdict),
    );
    let h234 = ideal(3, "h2,h3,h4");
    let r = wrap(slp_check(&h234, &ell));
    let label = match &r {
        Ok(rep) if !rep.verdict => {
            let fails: Vec<String> = rep
                .failures
                .iter()
                .map(|m| format!("i={} d={} rank {} of {}", m.i, m.d, m.rank, m.required))
                .collect();
            format!("<h2,h3,h4> with x1+x2+x3 [{}]", fails.join("; "))
        }
        _ => "<h2,h3,h4> with x1+x2+x3".to_string(),
    };
    f.check(label, r.map(|rep| rep.verdict));
    let init = wrap(initial_ideal(&h234, MonomialOrder::Lex));
    let expected = ideal(3, "x1^2,x2^3,x3^4");
    f.check(
        "in_lex(<h2,h3,h4>) = <x1^2,x2^3,x3^4>",
        init.and_then(|i| wrap(ideal_equal(&i, &expected))),
    );
    f.finish()
}

fn ckw_scan() -> Check {
    let report = wrap(scan(ScanRequest::new(ScanKind::Ckw3, 7)))?;
    let bad: Vec<&str> = report
        .rows
        .iter()
        .filter(|r| r.outcome != RowOutcome::Agree)
        .map(|r| r.id.as_str())
        .collect();
    ensure(bad.is_empty() && !report.rows.is_empty(), || {
        format!("rows not agreeing: {}", bad.join(", "))
    })?;
    ensure(report.necessary_violations == Some(0), || {
        format!("necessary-direction violations: {:?}", report.necessary_violations)
    })
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "Newton identities", Duration::from_secs(1), newton_identities),
        (2, "derivative identities", Duration::from_secs(1), derivative_identities),
        (3, "ideal memberships", Duration::from_secs(5), memberships),
        (4, "ideal equalities", Duration::from_secs(10), ideal_equalities),
        (5, "primality certificates", Duration::from_secs(60), primality),
        (6, "regular sequences", Duration::from_secs(10), regularity),
        (7, "residue formulas", Duration::from_secs(30), residues),
        (8, "weight sets", Duration::from_secs(30), weight_sets),
        (9, "Schur identities", Duration::from_secs(5), schur_identities),
        (10, "gradient ideal heights", Duration::from_secs(60), smoothness),
        (11, "strong Lefschetz", Duration::from_secs(30), lefschetz),
        (12, "three-generator regularity scan", Duration::from_secs(300), ckw_scan),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > limit {
            outcome = Err(format!("took longer than {limit:?}"));
        }
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status} {name} ({:.2?})", elapsed);
        if let Err(why) = outcome {
            println!("             {why}");
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
    } else {
        println!("acceptance: {} of 12 criteria fail: {failed:?}", failed.len());
        std::process::exit(1);
    }
}
