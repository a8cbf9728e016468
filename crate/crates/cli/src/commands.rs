//! One function per subcommand. Each returns an [`Outcome`]: the structured
//! result, a human rendering, and whether the answer was positive.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use symcert_core::cyclotomic::{
    cyclotomic_poly, format_univariate, vanishes, weight_set_with, EnumConfig, RootSumSpec,
};
use symcert_core::groebner::{
    groebner_basis_with, ideal_equal_with, initial_ideal_with, krull_dimension_with,
    radical_is_irrelevant_maximal_with,
};
use symcert_core::lefschetz::{artinian_presentation_with, default_element, slp_check_with};
use symcert_core::poly::{format_polynomial, monomial_to_string};
use symcert_core::primecert::{
    arithmetic_precheck, certify_prime_with, combine_disjoint_primes, is_regular_sequence_with,
    jacobian, minor_ideal,
};
use symcert_core::scan::{scan_with, ScanKind, ScanRequest, ScanRow};
use symcert_core::symmetric::{
    expand_generator, expand_generator_list, newton_identity_defect, residue_h_mod_h1h4,
    residue_p_mod_initial, NewtonIdentity,
};
use symcert_core::{
    Coefficient, Error, Execution, GroebnerConfig, IdealSpec, MonomialOrder, PolyRingContext,
    Polynomial,
};

use crate::args::{ArithOp, Command, Common, NewtonWhich, ResidueFamily};
use crate::fixtures;

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit 2.
    Usage(String),
    /// A resource ceiling was hit: exit 3.
    Ceiling(String),
    /// A precondition on the mathematics failed (for example a non-prime
    /// input to `combine`): exit 1.
    Negative(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Ceiling(_) => 3,
            CliError::Negative(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Ceiling(_) => "resource-ceiling",
            CliError::Negative(_) => "precondition",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Ceiling(m) | CliError::Negative(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCeiling(_) => CliError::Ceiling(e.to_string()),
            Error::Precondition(_) => CliError::Negative(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    pub certificate: Option<Value>,
    pub human: String,
    /// Exit 0 when true, 1 when false.
    pub positive: bool,
    /// Some part of the work hit a resource ceiling (exit 3 unless negative).
    pub ceiling: bool,
}

impl Outcome {
    fn new(inputs: Value, result: Value, human: String, positive: bool) -> Self {
        Outcome {
            inputs,
            result,
            certificate: None,
            human,
            positive,
            ceiling: false,
        }
    }
}

/// Settings shared by every subcommand, resolved from the common flags.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub ring_dim: Option<usize>,
    pub variables: Option<Vec<String>>,
    pub order: MonomialOrder,
    pub budget_spairs: u64,
    pub budget_enum: u64,
    pub seed: u64,
    pub execution: Execution,
}

impl RunConfig {
    pub fn from_common(c: &Common) -> CliResult<Self> {
        let order: MonomialOrder = c.order.parse()?;
        if let (Some(n), Some(v)) = (c.n, &c.vars) {
            if v.len() != n {
                return Err(CliError::Usage(format!("--vars names {} variables but --n is {n}", v.len())));
            }
        }
        Ok(RunConfig {
            ring_dim: c.n.or(c.vars.as_ref().map(|v| v.len())),
            variables: c.vars.clone(),
            order,
            budget_spairs: c.budget_spairs,
            budget_enum: c.budget_enum,
            seed: c.seed,
            execution: if c.sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            },
        })
    }

    fn groebner(&self) -> GroebnerConfig {
        GroebnerConfig {
            max_spairs: self.budget_spairs as usize,
            ..GroebnerConfig::default()
        }
    }

    fn ctx(&self) -> CliResult<PolyRingContext> {
        let ctx = match (&self.variables, self.ring_dim) {
            (Some(names), _) => PolyRingContext::with_names(names.clone(), self.order)?,
            (None, Some(n)) => PolyRingContext::new(n)?.with_order(self.order),
            (None, None) => return Err(CliError::Usage("this command needs --n or --vars".into())),
        };
        Ok(ctx)
    }
}

fn ring_json(ctx: &PolyRingContext) -> Value {
    json!({ "n": ctx.ring_dim(), "variables": ctx.names() })
}

fn fmt(p: &Polynomial, ctx: &PolyRingContext) -> String {
    format_polynomial(p, Some(ctx))
}

fn ideal_from(list: &str, ctx: &PolyRingContext) -> CliResult<IdealSpec> {
    Ok(IdealSpec::new(ctx.clone(), expand_generator_list(list, ctx)?)?)
}

fn gens_ideal(common: &Common, ctx: &PolyRingContext) -> CliResult<IdealSpec> {
    let list = common
        .gens
        .as_deref()
        .ok_or_else(|| CliError::Usage("this command needs --gens".into()))?;
    ideal_from(list, ctx)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(cmd: &Command, common: &Common, cfg: &RunConfig) -> CliResult<Outcome> {
    let gcfg = cfg.groebner();
    match cmd {
        Command::Gen { expr } => {
            let ctx = cfg.ctx()?;
            let p = expand_generator(expr, &ctx)?;
            let text = fmt(&p, &ctx);
            Ok(Outcome::new(
                json!({ "ring": ring_json(&ctx), "expr": expr }),
                json!({ "polynomial": text, "terms": p.len() }),
                text,
                true,
            ))
        }
        Command::Arith { op, lhs, rhs } => arith(*op, &[lhs.clone(), rhs.clone()], cfg),
        Command::Derive { f, var } => {
            let ctx = cfg.ctx()?;
            if *var == 0 || *var > ctx.ring_dim() {
                return Err(CliError::Usage(format!("--var must be in 1..={}", ctx.ring_dim())));
            }
            let p = expand_generator(f, &ctx)?;
            let d = p.partial_derivative(var - 1)?;
            let text = fmt(&d, &ctx);
            Ok(Outcome::new(
                json!({ "ring": ring_json(&ctx), "f": fmt(&p, &ctx), "var": var }),
                json!({ "derivative": text }),
                text,
                true,
            ))
        }
        Command::Gb => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let gb = groebner_basis_with(&ideal, cfg.order, &gcfg)?;
            let basis: Vec<String> = gb.basis().iter().map(|g| fmt(g, &ctx)).collect();
            let stats = gb.stats();
            Ok(Outcome::new(
                json!({ "ideal": ideal }),
                json!({
                    "order": cfg.order.name(),
                    "basis": basis,
                    "spairs_processed": stats.spairs_processed,
                }),
                basis.join("\n"),
                true,
            ))
        }
        Command::Member { f, ideal } => {
            let ctx = cfg.ctx()?;
            let list = ideal
                .as_deref()
                .or(common.gens.as_deref())
                .ok_or_else(|| CliError::Usage("member needs --ideal or --gens".into()))?;
            let i = ideal_from(list, &ctx)?;
            let p = expand_generator(f, &ctx)?;
            let gb = groebner_basis_with(&i, cfg.order, &gcfg)?;
            let nf = gb.normal_form(&p)?;
            let member = nf.is_zero();
            Ok(Outcome::new(
                json!({ "f": fmt(&p, &ctx), "ideal": i }),
                json!({ "member": member, "normal_form": fmt(&nf, &ctx) }),
                format!("member: {}\nnormal form: {}", yes_no(member), fmt(&nf, &ctx)),
                member,
            ))
        }
        Command::Equal { left, right } => {
            let ctx = cfg.ctx()?;
            let a = ideal_from(left, &ctx)?;
            let b = ideal_from(right, &ctx)?;
            let eq = ideal_equal_with(&a, &b, &gcfg)?;
            Ok(Outcome::new(
                json!({ "left": a, "right": b }),
                json!({ "equal": eq }),
                format!("equal: {}", yes_no(eq)),
                eq,
            ))
        }
        Command::Dim => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let d = krull_dimension_with(&ideal, &gcfg)?;
            let irrelevant = radical_is_irrelevant_maximal_with(&ideal, &gcfg)?;
            let human = format!(
                "krull dimension: {}\nheight: {}\nradical is the irrelevant ideal: {}",
                d.krull_dim,
                d.height,
                yes_no(irrelevant)
            );
            let mut result = serde_json::to_value(&d)?;
            result["radical_irrelevant"] = json!(irrelevant);
            Ok(Outcome::new(json!({ "ideal": ideal }), result, human, true))
        }
        Command::Regseq => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let r = is_regular_sequence_with(&ideal, &gcfg)?;
            Ok(Outcome::new(
                json!({ "ideal": ideal }),
                json!({ "regular_sequence": r }),
                format!("regular sequence: {}", yes_no(r)),
                r,
            ))
        }
        Command::Jacobian { minors, raw } => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let jac = jacobian(&ideal, !raw);
            let rows = jac.to_strings();
            let mut result = json!({ "rows": rows, "scalar_normalized": jac.scalar_normalized() });
            let mut human: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
            if let Some(k) = minors {
                let m = minor_ideal(&jac, *k)?;
                let gens = m.generator_strings();
                human.push(format!("{k}x{k} minors ({}):", gens.len()));
                human.extend(gens.iter().cloned());
                result["minor_size"] = json!(k);
                result["minors"] = json!(gens);
            }
            Ok(Outcome::new(json!({ "ideal": ideal }), result, human.join("\n"), true))
        }
        Command::Prime => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let cert = certify_prime_with(&ideal, &gcfg)?;
            let human = format!(
                "verdict: {:?}\nheight(I) = {} (k = {})\nheight(I + J') = {}\n{}",
                cert.verdict,
                cert.height_i,
                cert.generator_count,
                cert.height_i_plus_minors,
                cert.steps.join("\n")
            );
            let mut out = Outcome::new(
                json!({ "ideal": ideal }),
                json!({ "verdict": cert.verdict }),
                human,
                cert.is_prime(),
            );
            out.certificate = Some(serde_json::to_value(&cert)?);
            Ok(out)
        }
        Command::Combine {
            left,
            left_n,
            right,
            right_n,
        } => {
            let lctx = PolyRingContext::new(*left_n)?;
            let names = (1..=*right_n).map(|i| format!("y{i}")).collect();
            let rctx = PolyRingContext::with_names(names, MonomialOrder::DegRevLex)?;
            let a = certify_prime_with(&ideal_from(left, &lctx)?, &gcfg)?;
            let b = certify_prime_with(&ideal_from(right, &rctx)?, &gcfg)?;
            let joined = combine_disjoint_primes(&a, &b)?;
            let human = format!(
                "verdict: {:?} in {} variables\n{}",
                joined.verdict,
                joined.ideal.ring_dim(),
                joined.steps.join("\n")
            );
            let mut out = Outcome::new(
                json!({ "left": a.ideal, "right": b.ideal }),
                json!({ "verdict": joined.verdict, "ring_dim": joined.ideal.ring_dim() }),
                human,
                joined.is_prime(),
            );
            out.certificate = Some(serde_json::to_value(&joined)?);
            Ok(out)
        }
        Command::Precheck { a, b } => {
            let n = cfg
                .ring_dim
                .ok_or_else(|| CliError::Usage("precheck needs --n".into()))?;
            let r = arithmetic_precheck(n as u64, *a, *b)?;
            let human = format!(
                "b - a = {}, smallest prime factor {}, condition met: {}",
                r.n0,
                r.q1.map_or("none".to_string(), |q| q.to_string()),
                yes_no(r.condition_met)
            );
            let met = r.condition_met;
            Ok(Outcome::new(
                json!({ "n": n, "a": a, "b": b }),
                serde_json::to_value(&r)?,
                human,
                met,
            ))
        }
        Command::Weights { m, k, bound } => {
            let ecfg = EnumConfig {
                max_nodes: cfg.budget_enum,
            };
            let r = weight_set_with(*m, *k, *bound, &ecfg)?;
            let human = format!(
                "W({m},{k}) up to {bound}: {:?}\nclosed form agrees: {}",
                r.weights_bruteforce,
                yes_no(r.agreement)
            );
            let ok = r.agreement;
            Ok(Outcome::new(
                json!({ "m": m, "k": k, "bound": bound }),
                serde_json::to_value(&r)?,
                human,
                ok,
            ))
        }
        Command::Vanish { m, k, exps } => {
            let e = exps
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(format!("bad exponent list: {e}")))?;
            let spec = RootSumSpec::new(*m, &e, *k)?;
            let v = vanishes(&spec)?;
            Ok(Outcome::new(
                json!({ "m": m, "k": k, "exponents": spec.exponents() }),
                json!({ "vanishes": v, "weight": spec.weight() }),
                format!("vanishes: {}", yes_no(v)),
                v,
            ))
        }
        Command::Cyclotomic { m } => {
            let p = cyclotomic_poly(*m)?;
            let text = format_univariate(&p, "x");
            Ok(Outcome::new(
                json!({ "m": m }),
                json!({ "polynomial": text, "coefficients": p }),
                text,
                true,
            ))
        }
        Command::Residue { family, c } => {
            let (ctx, r) = match family {
                ResidueFamily::P => {
                    let ctx = cfg.ctx()?;
                    let r = residue_p_mod_initial(&ctx, *c)?;
                    (ctx, r)
                }
                ResidueFamily::H => {
                    if cfg.ring_dim.is_some_and(|n| n != 3) {
                        return Err(CliError::Usage("the h residue table is for n = 3".into()));
                    }
                    (PolyRingContext::new(3)?, residue_h_mod_h1h4(*c)?)
                }
            };
            let poly = r.to_polynomial(&ctx)?;
            let mut result = serde_json::to_value(&r)?;
            result["polynomial"] = json!(fmt(&poly, &ctx));
            Ok(Outcome::new(
                json!({ "ring": ring_json(&ctx), "family": format!("{family:?}").to_lowercase(), "c": c }),
                result,
                fmt(&poly, &ctx),
                true,
            ))
        }
        Command::Newton { which, index } => {
            let ctx = cfg.ctx()?;
            let w = match which {
                NewtonWhich::Eq1 => NewtonIdentity::Eq1,
                NewtonWhich::Eq2 => NewtonIdentity::Eq2,
                NewtonWhich::Eq3 => NewtonIdentity::Eq3,
            };
            let d = newton_identity_defect(&ctx, w, *index)?;
            Ok(Outcome::new(
                json!({ "ring": ring_json(&ctx), "identity": w, "index": index }),
                json!({ "defect": fmt(&d, &ctx), "holds": d.is_zero() }),
                format!("defect: {}", fmt(&d, &ctx)),
                d.is_zero(),
            ))
        }
        Command::Slp { ell, random_ell } => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let n = ctx.ring_dim();
            let l = if let Some(text) = ell {
                expand_generator(text, &ctx)?
            } else if *random_ell {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                Polynomial::from_terms(
                    n,
                    (0..n).map(|i| {
                        let c: i64 = rng.random_range(1..=99);
                        (symcert_core::Monomial::var_power(n, i, 1), Coefficient::from_int(c))
                    }),
                )
            } else {
                default_element(n)
            };
            let r = slp_check_with(&ideal, &l, cfg.execution, &gcfg)?;
            let mut human = vec![
                format!("element: {}", fmt(&l, &ctx)),
                format!("hilbert function: {:?}", r.hilbert),
                format!("strong Lefschetz: {}", yes_no(r.verdict)),
            ];
            for f in &r.failures {
                human.push(format!("  x l^{} on degree {}: rank {} < {}", f.d, f.i, f.rank, f.required));
            }
            let mut result = serde_json::to_value(&r)?;
            result["element"] = json!(fmt(&l, &ctx));
            let v = r.verdict;
            Ok(Outcome::new(json!({ "ideal": ideal }), result, human.join("\n"), v))
        }
        Command::Hilbert => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let a = artinian_presentation_with(&ideal, &gcfg)?;
            let basis: Vec<String> = a
                .basis()
                .iter()
                .map(|m| monomial_to_string(m, Some(&ctx)))
                .collect();
            Ok(Outcome::new(
                json!({ "ideal": ideal }),
                json!({
                    "hilbert": a.hilbert(),
                    "socle_degree": a.socle_degree(),
                    "dimension": a.dimension(),
                    "basis": basis,
                }),
                format!("hilbert function: {:?}\nsocle degree: {}", a.hilbert(), a.socle_degree()),
                true,
            ))
        }
        Command::Initial => {
            let ctx = cfg.ctx()?;
            let ideal = gens_ideal(common, &ctx)?;
            let init = initial_ideal_with(&ideal, cfg.order, &gcfg)?;
            let gens = init.generator_strings();
            Ok(Outcome::new(
                json!({ "ideal": ideal }),
                json!({ "order": cfg.order.name(), "generators": gens }),
                gens.join("\n"),
                true,
            ))
        }
        Command::Scan { kind, max, resume } => {
            let kind: ScanKind = kind.parse()?;
            let mut req = ScanRequest::new(kind, *max);
            if let Some(n) = cfg.ring_dim {
                req.n = n;
            }
            let mut done = HashMap::new();
            let mut writer = None;
            if let Some(path) = resume {
                let mut torn = false;
                if path.exists() {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    torn = !text.is_empty() && !text.ends_with('\n');
                    for line in text.lines() {
                        if line.trim().is_empty() {
                            continue;
                        }
                        // a torn last line from an interrupted run is recomputed
                        if let Ok(row) = serde_json::from_str::<ScanRow>(line) {
                            done.insert(row.id.clone(), row);
                        }
                    }
                }
                let mut f = OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(path)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                if torn {
                    writeln!(f).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                }
                writer = Some(Mutex::new(f));
            }
            let sink = |row: &ScanRow| {
                if let Some(w) = &writer {
                    let line = serde_json::to_string(row).expect("rows serialize");
                    let mut f = w.lock().expect("writer lock");
                    let _ = writeln!(f, "{line}");
                    let _ = f.flush();
                }
            };
            let report = scan_with(req, cfg.execution, &gcfg, &done, &sink)?;
            let mut human = vec![format!(
                "{} n={} max={}: {} rows, {} agree, {} disagree, {} not covered, {} hit a ceiling",
                kind,
                req.n,
                max,
                report.rows.len(),
                report.agreements,
                report.disagreements,
                report.not_applicable,
                report.ceilings
            )];
            if let Some(v) = report.necessary_violations {
                human.push(format!("violations of the proven direction: {v}"));
            }
            for r in &report.rows {
                let mark = match r.outcome {
                    symcert_core::scan::RowOutcome::Disagree => "  <-- disagrees",
                    symcert_core::scan::RowOutcome::Ceiling => "  <-- ceiling",
                    _ => "",
                };
                human.push(format!("{:<24} {}{}", r.id, r.detail, mark));
            }
            let mut out = Outcome::new(
                json!({ "kind": kind, "n": req.n, "max": max }),
                serde_json::to_value(&report)?,
                human.join("\n"),
                report.disagreements == 0,
            );
            out.ceiling = report.ceilings > 0;
            Ok(out)
        }
        Command::Fixtures { dir } => {
            let path = dir.clone().unwrap_or_else(fixtures::default_dir);
            let summary = fixtures::run_corpus(&path)?;
            let human = summary.human();
            let ok = summary.failed == 0;
            Ok(Outcome::new(
                json!({ "dir": path.display().to_string() }),
                serde_json::to_value(&summary)?,
                human,
                ok,
            ))
        }
    }
}

fn arith(op: ArithOp, operands: &[String], cfg: &RunConfig) -> CliResult<Outcome> {
    let ctx = cfg.ctx()?;
    let f = expand_generator(&operands[0], &ctx)?;
    let r = match op {
        ArithOp::Add | ArithOp::Sub | ArithOp::Mul => {
            let g = expand_generator(&operands[1], &ctx)?;
            match op {
                ArithOp::Add => f.add(&g)?,
                ArithOp::Sub => f.sub(&g)?,
                _ => f.mul(&g)?,
            }
        }
        ArithOp::Pow => {
            let e: u32 = operands[1]
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad exponent `{}`", operands[1])))?;
            f.pow(e)?
        }
        ArithOp::Scale => {
            let c: Coefficient = operands[1].trim().parse().map_err(CliError::Usage)?;
            f.scale(&c)
        }
    };
    let text = fmt(&r, &ctx);
    Ok(Outcome::new(
        json!({ "ring": ring_json(&ctx), "op": format!("{op:?}").to_lowercase(), "operands": operands }),
        json!({ "polynomial": text, "terms": r.len() }),
        text,
        true,
    ))
}
