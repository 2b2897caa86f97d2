//! Named checks, run selection and reports.

mod checks;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use checks::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cost {
    /// Under a second.
    Fast,
    /// Under a minute.
    Medium,
    /// Opt-in with `include_slow`.
    Slow,
}

/// What a check computes: expected and computed values and the verdict.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub expected: Value,
    pub computed: Value,
    pub passed: bool,
}

pub type CheckFn = fn(&Context) -> Result<Outcome, String>;

pub struct CheckEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub provenance: Provenance,
    pub cost: Cost,
    /// Statements of the manifest this check covers.
    pub covers: &'static [&'static str],
    pub run: CheckFn,
}

#[derive(Clone, Debug, Serialize)]
pub struct Expected {
    pub value: Value,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub expected: Expected,
    pub computed: Value,
    pub passed: bool,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub seed: u64,
    pub results: Vec<CheckResult>,
    pub totals: Totals,
    pub wall_ms: u64,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("bad filter pattern `{0}`")]
    BadPattern(String),
    #[error("no check matches `{filter}`; valid ids:\n  {}", valid.join("\n  "))]
    NoMatch { filter: String, valid: Vec<String> },
}

/// Statements that must each be covered by at least one check.
pub const MANIFEST: &[&str] = &[
    "3.1(i)", "3.1(ii)", "3.1(iii)", "3.1(iv)", "3.1(v)", "3.1(vi)", "3.1(vii)", "3.1(viii)",
    "3.2", "3.3", "X", "R", "L", "P", "Q", "2.6", "U", "M",
    "4.1(ii)", "4.1(iii)", "4.1(iv)", "4.1(v)", "4.1(vi)", "4.1(vii)", "4.1(viii)", "4.1(ix)", "4.1(x)",
    "4.2", "4.3", "4.4", "4.6", "4.7(i)", "4.7(ii)", "4.8(i)", "4.8(iii)", "4.9(i)", "4.9(ii)",
];

pub fn registry() -> &'static [CheckEntry] {
    checks::REGISTRY
}

/// Ids covered by the registry that are missing from the manifest, and
/// manifest statements without a check.
pub fn coverage_gaps() -> (Vec<String>, Vec<String>) {
    let covered: BTreeSet<&str> = registry()
        .iter()
        .flat_map(|e| e.covers.iter().copied())
        .collect();
    let manifest: BTreeSet<&str> = MANIFEST.iter().copied().collect();
    let unknown = covered.difference(&manifest).map(|s| s.to_string()).collect();
    let missing = manifest.difference(&covered).map(|s| s.to_string()).collect();
    (unknown, missing)
}

fn is_glob(s: &str) -> bool {
    s.contains(['*', '?', '['])
}

/// Entries matching `filter`. A glob (or empty filter) skips slow checks
/// unless `include_slow`; an exact id always selects its check.
pub fn select(filter: &str, include_slow: bool) -> Result<Vec<&'static CheckEntry>, VerifyError> {
    let valid = || registry().iter().map(|e| e.id.to_string()).collect::<Vec<_>>();
    let chosen: Vec<&CheckEntry> = if filter.is_empty() || is_glob(filter) {
        let pattern = if filter.is_empty() { "*" } else { filter };
        let pat = glob::Pattern::new(pattern).map_err(|_| VerifyError::BadPattern(filter.to_string()))?;
        registry()
            .iter()
            .filter(|e| pat.matches(e.id) && (include_slow || e.cost != Cost::Slow))
            .collect()
    } else {
        registry().iter().filter(|e| e.id == filter).collect()
    };
    if chosen.is_empty() {
        return Err(VerifyError::NoMatch { filter: filter.to_string(), valid: valid() });
    }
    Ok(chosen)
}

/// Worker count from `VERIFY_THREADS`, defaulting to available parallelism.
pub fn thread_count() -> usize {
    std::env::var("VERIFY_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

fn run_entry(entry: &CheckEntry, ctx: &Context) -> CheckResult {
    let t = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (entry.run)(ctx)))
        .unwrap_or_else(|_| Err("check panicked".to_string()));
    let ms = t.elapsed().as_millis() as u64;
    let (expected, computed, passed) = match outcome {
        Ok(o) => (o.expected, o.computed, o.passed),
        Err(e) => (Value::Null, serde_json::json!({ "error": e }), false),
    };
    CheckResult {
        check_id: entry.id.to_string(),
        expected: Expected { value: expected, provenance: entry.provenance },
        computed,
        passed,
        ms,
    }
}

/// Run the selected checks on a shared context.
pub fn run(filter: &str, seed: u64, include_slow: bool) -> Result<RunReport, VerifyError> {
    let entries = select(filter, include_slow)?;
    let ctx = Context::new(seed);
    Ok(run_entries(&entries, &ctx))
}

pub fn run_entries(entries: &[&CheckEntry], ctx: &Context) -> RunReport {
    let t = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
        .expect("thread pool");
    let results: Vec<CheckResult> = pool.install(|| {
        use rayon::prelude::*;
        entries.par_iter().map(|e| run_entry(e, ctx)).collect()
    });
    let passed = results.iter().filter(|r| r.passed).count();
    RunReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        seed: ctx.seed(),
        totals: Totals { checks: results.len(), passed, failed: results.len() - passed },
        results,
        wall_ms: t.elapsed().as_millis() as u64,
    }
}

/// JSON rendering of a report, pretty-printed.
pub fn to_json(report: &RunReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

fn group_key(id: &str) -> &str {
    match id.strip_prefix("lemma-") {
        Some(rest) => {
            let end = rest.find(|c: char| !(c.is_ascii_digit() || c == '.')).unwrap_or(rest.len());
            &id[..6 + end]
        }
        None => "constructions",
    }
}

/// Markdown rendering: one table per lemma (or per construction group).
pub fn to_markdown(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Verification report\n\nversion {}, seed {}, {} passed, {} failed\n",
        report.tool_version, report.seed, report.totals.passed, report.totals.failed
    );
    let mut current = "";
    for r in &report.results {
        let key = group_key(&r.check_id);
        if key != current {
            current = key;
            let _ = writeln!(out, "\n## {key}\n");
            let _ = writeln!(out, "| check | expected | computed | provenance | passed | ms |");
            let _ = writeln!(out, "|---|---|---|---|---|---|");
        }
        let cell = |v: &Value| v.to_string().replace('|', "\\|");
        let _ = writeln!(
            out,
            "| {} | {} | {} | {:?} | {} | {} |",
            r.check_id,
            cell(&r.expected.value),
            cell(&r.computed),
            r.expected.provenance,
            if r.passed { "yes" } else { "NO" },
            r.ms
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_manifest_covered() {
        let ids: BTreeSet<&str> = registry().iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), registry().len());
        let (unknown, missing) = coverage_gaps();
        assert!(unknown.is_empty(), "{unknown:?}");
        assert!(missing.is_empty(), "{missing:?}");
    }

    #[test]
    fn selection() {
        assert_eq!(select("lemma-3.1-*", false).unwrap().len(), 8);
        assert!(select("lemma-4.9-orbits", false).is_ok());
        match select("no-such-check", false) {
            Err(VerifyError::NoMatch { valid, .. }) => assert!(valid.iter().any(|v| v == "lemma-3.2")),
            other => panic!("unexpected {:?}", other.map(|v| v.len())),
        }
        let all = select("*", true).unwrap().len();
        assert!(select("*", false).unwrap().len() < all);
    }

    #[test]
    fn group_keys() {
        assert_eq!(group_key("lemma-3.1-iii"), "lemma-3.1");
        assert_eq!(group_key("lemma-4.9-orbits"), "lemma-4.9");
        assert_eq!(group_key("lemma-3.2"), "lemma-3.2");
        assert_eq!(group_key("construct-l"), "constructions");
    }
}
