//! One line per acceptance criterion; the test fails if any criterion fails.

mod common;

use std::time::Instant;

use spgroups::verify::{self, CheckEntry, Context};

const SEED: u64 = 0;

const CRITERIA: &[(u32, &str, &[&str])] = &[
    (1, "fixed-space table", &["lemma-3.1-*"]),
    (2, "centralizer of pi in X", &["lemma-3.2"]),
    (3, "cosets of O^2(C)<pi> contain involutions", &["lemma-3.3"]),
    (4, "constructions of X, R, L, P", &["construct-*"]),
    (5, "Q model and duality", &["q-model", "lemma-2.6-duality"]),
    (6, "centralizers in Q/Z of d-elements, D, T and pi", &["lemma-4.1-iv", "lemma-4.1-v", "lemma-4.1-vi", "lemma-4.1-vii", "lemma-4.1-ix"]),
    (7, "elementary abelian 9-subgroups and exponent-3 27-subgroups", &["lemma-4.1-viii", "lemma-4.2", "lemma-4.3"]),
    (8, "involution classes of C_L(d3)", &["lemma-4.4"]),
    (9, "C_U(pi) and C_M(pi)", &["lemma-4.7-*"]),
    (10, "C_U(r)", &["lemma-4.8-*"]),
    (11, "orbits on Q/Z and C_U(rho)", &["lemma-4.9-*"]),
];

fn entries(patterns: &[&str]) -> Vec<&'static CheckEntry> {
    let mut out: Vec<&'static CheckEntry> = Vec::new();
    for p in patterns {
        for e in verify::select(p, true).expect("pattern matches") {
            if !out.iter().any(|o| o.id == e.id) {
                out.push(e);
            }
        }
    }
    out
}

#[test]
fn acceptance() {
    let ctx = Context::new(SEED);
    let mut failed = Vec::new();
    for &(n, name, patterns) in CRITERIA {
        let chosen = entries(patterns);
        let report = verify::run_entries(&chosen, &ctx);
        let bad: Vec<&str> = report.results.iter().filter(|r| !r.passed).map(|r| r.check_id.as_str()).collect();
        let verdict = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {n:>2} {verdict} {name}: {}/{} checks ({} ms){}",
            report.totals.passed,
            report.totals.checks,
            report.wall_ms,
            if bad.is_empty() { String::new() } else { format!(" failing: {}", bad.join(", ")) }
        );
        if !bad.is_empty() {
            failed.push(n);
        }
    }
    let t = Instant::now();
    let mut suite_failures = Vec::new();
    let mut cases = 0;
    for s in common::SUITES {
        match (s.run)(SEED) {
            Ok(c) => cases += c,
            Err(e) => suite_failures.push(format!("{}: {e}", s.name)),
        }
    }
    println!(
        "criterion 12 {} property suites: {} suites, {cases} cases ({} ms){}",
        if suite_failures.is_empty() { "PASS" } else { "FAIL" },
        common::SUITES.len(),
        t.elapsed().as_millis(),
        if suite_failures.is_empty() { String::new() } else { format!(" failing: {}", suite_failures.join("; ")) }
    );
    if !suite_failures.is_empty() {
        failed.push(12);
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
