//! Fixture corpus: JSON files, each holding a list of cases. A case is a CLI
//! invocation plus the expected exit code and expected values at JSON
//! pointers into the structured report.
//!
//! ```json
//! { "cases": [ {
//!     "id": "member-p5",
//!     "provenance": "power sums: p5 in <p1, p2>",
//!     "args": ["member", "--n", "4", "--f", "p5", "--ideal", "p1,p2"],
//!     "exit": 0,
//!     "expect": { "/result/member": true }
//! } ] }
//! ```

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::commands::{CliError, CliResult};
use crate::report::invoke;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureCase {
    pub id: String,
    pub provenance: String,
    pub args: Vec<String>,
    #[serde(default)]
    pub exit: i32,
    #[serde(default)]
    pub expect: BTreeMap<String, Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusFile {
    cases: Vec<FixtureCase>,
}

#[derive(Debug, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub provenance: String,
    pub file: String,
    pub passed: bool,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub files: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl Summary {
    pub fn human(&self) -> String {
        let mut out = Vec::new();
        for c in &self.cases {
            out.push(format!(
                "{} {:<36} {}",
                if c.passed { "pass" } else { "FAIL" },
                c.id,
                c.provenance
            ));
            for m in &c.mismatches {
                out.push(format!("     {m}"));
            }
        }
        out.push(format!("{} of {} cases passed", self.passed, self.total));
        out.join("\n")
    }
}

/// `fixtures/` next to this crate's manifest.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Loads every `*.json` file in `dir` (sorted by name).
pub fn load_corpus(dir: &Path) -> CliResult<Vec<(String, FixtureCase)>> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    let mut ids = HashSet::new();
    for f in files {
        let name = f.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let text = std::fs::read_to_string(&f)
            .map_err(|e| CliError::Usage(format!("{}: {e}", f.display())))?;
        let parsed: CorpusFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
        for case in parsed.cases {
            if !ids.insert(case.id.clone()) {
                return Err(CliError::Usage(format!("duplicate fixture id `{}`", case.id)));
            }
            if case.provenance.trim().is_empty() {
                return Err(CliError::Usage(format!("fixture `{}` has no provenance", case.id)));
            }
            if case.args.first().is_some_and(|a| a == "fixtures") {
                return Err(CliError::Usage(format!("fixture `{}` may not run the corpus", case.id)));
            }
            out.push((name.clone(), case));
        }
    }
    Ok(out)
}

pub fn run_case(case: &FixtureCase) -> Vec<String> {
    let argv = std::iter::once("symcert".to_string())
        .chain(case.args.iter().cloned())
        .chain(["--format".to_string(), "structured".to_string()]);
    let inv = invoke(argv);
    let mut mismatches = Vec::new();
    if inv.exit_code != case.exit {
        mismatches.push(format!("exit code {} (expected {})", inv.exit_code, case.exit));
    }
    let report = match &inv.report {
        Some(r) => serde_json::to_value(r).expect("reports serialize"),
        None => Value::Null,
    };
    for (pointer, want) in &case.expect {
        match report.pointer(pointer) {
            Some(got) if got == want => {}
            Some(got) => mismatches.push(format!("{pointer}: got {got}, expected {want}")),
            None => mismatches.push(format!("{pointer}: missing")),
        }
    }
    mismatches
}

pub fn run_corpus(dir: &Path) -> CliResult<Summary> {
    let corpus = load_corpus(dir)?;
    let files: HashSet<&str> = corpus.iter().map(|(f, _)| f.as_str()).collect();
    let cases: Vec<CaseResult> = corpus
        .iter()
        .map(|(file, case)| {
            let mismatches = run_case(case);
            CaseResult {
                id: case.id.clone(),
                provenance: case.provenance.clone(),
                file: file.clone(),
                passed: mismatches.is_empty(),
                mismatches,
            }
        })
        .collect();
    let passed = cases.iter().filter(|c| c.passed).count();
    Ok(Summary {
        files: files.len(),
        total: cases.len(),
        passed,
        failed: cases.len() - passed,
        cases,
    })
}
