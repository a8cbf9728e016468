//! Conjecture sweeps: each row is one ideal, its computed property, and what
//! the conjecture predicts. Rows are independent and reported in a fixed
//! order; a ceiling on one row marks that row and the sweep continues.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::groebner::{GroebnerConfig, IdealSpec};
use crate::poly::PolyRingContext;
use crate::primecert::{certify_prime_with, is_regular_sequence_with, Verdict};
use crate::symmetric::{complete_homogeneous, power_sum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanKind {
    /// `p_a, p_b, p_c` in three variables, `a < b < c`, `gcd = 1`: regular
    /// iff `abc ≡ 0 (mod 6)`. Only "regular ⇒ abc ≡ 0" is a theorem.
    Ckw3,
    /// `p_a, p_b, p_c` with `<p_a, p_b>` prime: regular unless `(b, c) = (2a, 5a)`.
    PabRegularity,
    /// `<h_1, h_2m>` is prime.
    H1Even,
}

impl ScanKind {
    pub fn name(self) -> &'static str {
        match self {
            ScanKind::Ckw3 => "ckw3",
            ScanKind::PabRegularity => "pab-regularity",
            ScanKind::H1Even => "h1-even",
        }
    }

    pub fn default_n(self) -> usize {
        match self {
            ScanKind::Ckw3 => 3,
            ScanKind::PabRegularity | ScanKind::H1Even => 4,
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ckw3" => Ok(ScanKind::Ckw3),
            "pab-regularity" => Ok(ScanKind::PabRegularity),
            "h1-even" => Ok(ScanKind::H1Even),
            _ => Err(Error::InvalidArgument(format!("unknown scan kind `{s}`"))),
        }
    }
}

/// What to sweep. For the triple scans `max` bounds `c`; for `h1-even` it
/// bounds `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRequest {
    pub kind: ScanKind,
    pub n: usize,
    pub max: u32,
}

impl ScanRequest {
    pub fn new(kind: ScanKind, max: u32) -> Self {
        ScanRequest {
            kind,
            n: kind.default_n(),
            max,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.kind == ScanKind::Ckw3 && self.n != 3 {
            return Err(Error::InvalidArgument("ckw3 is a three-variable scan".into()));
        }
        if self.n == 0 || self.max == 0 {
            return Err(Error::InvalidArgument("scan needs n >= 1 and max >= 1".into()));
        }
        Ok(())
    }

    /// Row parameters in report order.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let m = self.max;
        match self.kind {
            ScanKind::Ckw3 => triples(m)
                .filter(|t| t[0].gcd(&t[1]).gcd(&t[2]) == 1)
                .collect(),
            ScanKind::PabRegularity => triples(m).collect(),
            ScanKind::H1Even => (1..=m).map(|k| vec![k]).collect(),
        }
    }

    pub fn row_id(&self, params: &[u32]) -> String {
        let p: Vec<String> = params.iter().map(|x| x.to_string()).collect();
        format!("{}:n{}:{}", self.kind, self.n, p.join("-"))
    }
}

fn triples(m: u32) -> impl Iterator<Item = Vec<u32>> {
    (1..=m).flat_map(move |a| {
        (a + 1..=m).flat_map(move |b| (b + 1..=m).map(move |c| vec![a, b, c]))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowOutcome {
    Agree,
    Disagree,
    /// The conjecture says nothing about this row.
    NotApplicable,
    /// A resource ceiling stopped the computation.
    Ceiling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub id: String,
    pub params: Vec<u32>,
    pub computed: Option<bool>,
    pub conjectured: Option<bool>,
    pub outcome: RowOutcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub request: ScanRequest,
    pub rows: Vec<ScanRow>,
    pub agreements: usize,
    pub disagreements: usize,
    pub not_applicable: usize,
    pub ceilings: usize,
    /// ckw3 only: rows that are regular although `abc` is not divisible by 6.
    /// These would contradict a theorem, not just the conjecture.
    pub necessary_violations: Option<usize>,
}

impl ScanReport {
    fn assemble(request: ScanRequest, rows: Vec<ScanRow>) -> Self {
        let count = |o: RowOutcome| rows.iter().filter(|r| r.outcome == o).count();
        let necessary_violations = (request.kind == ScanKind::Ckw3).then(|| {
            rows.iter()
                .filter(|r| r.computed == Some(true) && r.conjectured == Some(false))
                .count()
        });
        ScanReport {
            request,
            agreements: count(RowOutcome::Agree),
            disagreements: count(RowOutcome::Disagree),
            not_applicable: count(RowOutcome::NotApplicable),
            ceilings: count(RowOutcome::Ceiling),
            necessary_violations,
            rows,
        }
    }
}

pub fn scan(request: ScanRequest) -> Result<ScanReport> {
    scan_with(request, Execution::default(), &GroebnerConfig::default(), &HashMap::new(), &|_| {})
}

/// Runs the sweep. Rows whose id is in `done` are reused as given, so an
/// interrupted sweep can resume. `sink` sees every freshly computed row as
/// soon as it finishes (in completion order, possibly from several threads).
pub fn scan_with(
    request: ScanRequest,
    exec: Execution,
    cfg: &GroebnerConfig,
    done: &HashMap<String, ScanRow>,
    sink: &(dyn Fn(&ScanRow) + Sync),
) -> Result<ScanReport> {
    request.validate()?;
    let ctx = PolyRingContext::new(request.n)?;
    let params = request.rows();

    // pab rows depend on whether <p_a, p_b> is certified prime; compute each pair once
    let mut pair_verdicts: HashMap<(u32, u32), Result<Verdict>> = HashMap::new();
    if request.kind == ScanKind::PabRegularity {
        let mut pairs: Vec<(u32, u32)> = params
            .iter()
            .filter(|p| !done.contains_key(&request.row_id(p)))
            .map(|p| (p[0], p[1]))
            .collect();
        pairs.dedup();
        let verdicts = exec.map_ref(&pairs, |&(a, b)| {
            let i = power_ideal(&ctx, &[a, b])?;
            Ok(certify_prime_with(&i, cfg)?.verdict)
        });
        pair_verdicts = pairs.into_iter().zip(verdicts).collect();
    }

    let rows = exec.map_ref(&params, |p| {
        let id = request.row_id(p);
        if let Some(row) = done.get(&id) {
            return row.clone();
        }
        let row = match request.kind {
            ScanKind::Ckw3 => ckw3_row(&ctx, id, p, cfg),
            ScanKind::PabRegularity => pab_row(&ctx, id, p, &pair_verdicts[&(p[0], p[1])], cfg),
            ScanKind::H1Even => h1_even_row(&ctx, id, p, cfg),
        };
        sink(&row);
        row
    });
    Ok(ScanReport::assemble(request, rows))
}

fn power_ideal(ctx: &PolyRingContext, degrees: &[u32]) -> Result<IdealSpec> {
    let gens = degrees
        .iter()
        .map(|&a| power_sum(ctx, a))
        .collect::<Result<Vec<_>>>()?;
    IdealSpec::new(ctx.clone(), gens)
}

fn make_row(id: String, params: &[u32], computed: Result<bool>, conjectured: Option<bool>, what: &str) -> ScanRow {
    match computed {
        Ok(c) => {
            let outcome = match conjectured {
                None => RowOutcome::NotApplicable,
                Some(x) if x == c => RowOutcome::Agree,
                Some(_) => RowOutcome::Disagree,
            };
            let detail = if c { what.to_string() } else { format!("not {what}") };
            ScanRow {
                id,
                params: params.to_vec(),
                computed: Some(c),
                conjectured,
                outcome,
                detail,
            }
        }
        Err(e) => ScanRow {
            id,
            params: params.to_vec(),
            computed: None,
            conjectured,
            outcome: RowOutcome::Ceiling,
            detail: e.to_string(),
        },
    }
}

fn ckw3_row(ctx: &PolyRingContext, id: String, p: &[u32], cfg: &GroebnerConfig) -> ScanRow {
    let computed = power_ideal(ctx, p).and_then(|i| is_regular_sequence_with(&i, cfg));
    let conjectured = (p[0] as u64 * p[1] as u64 * p[2] as u64).is_multiple_of(6);
    make_row(id, p, computed, Some(conjectured), "regular")
}

fn pab_row(
    ctx: &PolyRingContext,
    id: String,
    p: &[u32],
    pair: &Result<Verdict>,
    cfg: &GroebnerConfig,
) -> ScanRow {
    let (a, b, c) = (p[0], p[1], p[2]);
    match pair {
        Err(e) => make_row(id, p, Err(e.clone()), None, "regular"),
        Ok(v) if *v != Verdict::Prime => {
            let computed = power_ideal(ctx, p).and_then(|i| is_regular_sequence_with(&i, cfg));
            let mut row = make_row(id, p, computed, None, "regular");
            if row.outcome != RowOutcome::Ceiling {
                row.detail = format!("{}; <p{a},p{b}> not certified prime ({v:?})", row.detail);
            }
            row
        }
        Ok(_) => {
            let computed = power_ideal(ctx, p).and_then(|i| is_regular_sequence_with(&i, cfg));
            let exception = b == 2 * a && c == 5 * a;
            make_row(id, p, computed, Some(!exception), "regular")
        }
    }
}

fn h1_even_row(ctx: &PolyRingContext, id: String, p: &[u32], cfg: &GroebnerConfig) -> ScanRow {
    let verdict = (|| {
        let gens = vec![complete_homogeneous(ctx, 1)?, complete_homogeneous(ctx, 2 * p[0])?];
        certify_prime_with(&IdealSpec::new(ctx.clone(), gens)?, cfg)
    })();
    match verdict {
        Ok(cert) => {
            let mut row = make_row(id, p, Ok(cert.is_prime()), Some(true), "certified prime");
            if !cert.is_prime() {
                row.detail = format!("{:?}: no disproof, the certificate is one-sided", cert.verdict);
            }
            row
        }
        Err(e) => make_row(id, p, Err(e), Some(true), ""),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_plans() {
        let r = ScanRequest::new(ScanKind::Ckw3, 4);
        assert_eq!(r.rows(), vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        let r = ScanRequest::new(ScanKind::Ckw3, 6);
        assert!(!r.rows().contains(&vec![2, 4, 6]));
        assert_eq!(ScanRequest::new(ScanKind::PabRegularity, 4).rows().len(), 4);
        assert_eq!(ScanRequest::new(ScanKind::H1Even, 3).rows(), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(r.row_id(&[1, 2, 3]), "ckw3:n3:1-2-3");
    }

    #[test]
    fn kinds_round_trip() {
        for k in [ScanKind::Ckw3, ScanKind::PabRegularity, ScanKind::H1Even] {
            assert_eq!(k.name().parse::<ScanKind>().unwrap(), k);
        }
        assert!("nope".parse::<ScanKind>().is_err());
    }

    #[test]
    fn bad_requests() {
        let mut r = ScanRequest::new(ScanKind::Ckw3, 5);
        r.n = 4;
        assert!(scan(r).is_err());
        assert!(scan(ScanRequest::new(ScanKind::H1Even, 0)).is_err());
    }

    #[test]
    fn ckw3_small() {
        let report = scan(ScanRequest::new(ScanKind::Ckw3, 4)).unwrap();
        // abc = 6, 8, 12, 24: only 1,2,4 misses the factor 3
        let computed: Vec<_> = report.rows.iter().map(|r| r.computed).collect();
        assert_eq!(computed, vec![Some(true), Some(false), Some(true), Some(true)]);
        assert_eq!(report.disagreements, 0);
        assert_eq!(report.necessary_violations, Some(0));
    }

    #[test]
    fn pab_exception_row() {
        let report = scan(ScanRequest::new(ScanKind::PabRegularity, 5)).unwrap();
        let row = report.rows.iter().find(|r| r.params == vec![1, 2, 5]).unwrap();
        assert_eq!(row.computed, Some(false));
        assert_eq!(row.conjectured, Some(false));
        assert_eq!(row.outcome, RowOutcome::Agree);
        assert_eq!(report.disagreements, 0);
        assert_eq!(report.ceilings, 0);
    }

    #[test]
    fn h1_even_first_rows() {
        let report = scan(ScanRequest::new(ScanKind::H1Even, 2)).unwrap();
        assert!(report.rows.iter().all(|r| r.computed == Some(true)));
        assert_eq!(report.agreements, 2);
    }

    #[test]
    fn resume_reuses_rows_and_strategies_agree() {
        let req = ScanRequest::new(ScanKind::Ckw3, 5);
        let cfg = GroebnerConfig::default();
        let seen = std::sync::Mutex::new(Vec::new());
        let full = scan_with(req, Execution::Parallel, &cfg, &HashMap::new(), &|r| {
            seen.lock().unwrap().push(r.id.clone())
        })
        .unwrap();
        assert_eq!(seen.lock().unwrap().len(), full.rows.len());

        let done: HashMap<String, ScanRow> =
            full.rows.iter().take(3).map(|r| (r.id.clone(), r.clone())).collect();
        let fresh = std::sync::Mutex::new(0usize);
        let resumed = scan_with(req, Execution::Sequential, &cfg, &done, &|_| {
            *fresh.lock().unwrap() += 1
        })
        .unwrap();
        assert_eq!(*fresh.lock().unwrap(), full.rows.len() - 3);
        assert_eq!(resumed, full);
    }

    #[test]
    fn ceiling_marks_row() {
        let req = ScanRequest::new(ScanKind::H1Even, 2);
        let cfg = GroebnerConfig {
            max_spairs: 1,
            ..GroebnerConfig::default()
        };
        let report = scan_with(req, Execution::Sequential, &cfg, &HashMap::new(), &|_| {}).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert!(report.ceilings >= 1);
        let row = report.rows.iter().find(|r| r.outcome == RowOutcome::Ceiling).unwrap();
        assert_eq!(row.computed, None);
        assert!(row.detail.contains("ceiling"));
    }
}
