use std::process::Command;

fn spverify(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_spverify")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn table_checks_pass_with_schema() {
    let (code, stdout, _) = spverify(&["run", "--filter", "lemma-3.1-*", "--seed", "4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 8);
    for r in results {
        for key in ["check_id", "expected", "computed", "passed", "ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert!(r["expected"].get("value").is_some() && r["expected"].get("provenance").is_some());
        assert_eq!(r["passed"], true);
    }
    assert_eq!(v["seed"], 4);
}

#[test]
fn unknown_id_lists_valid_ids() {
    let (code, _, stderr) = spverify(&["run", "--filter", "lemma-9.9"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("lemma-4.9-orbits") && stderr.contains("registry-coverage"));
}

#[test]
fn usage_error() {
    let (code, _, _) = spverify(&["run", "--format", "yaml"]);
    assert_eq!(code, 2);
}

#[test]
fn orbits_check_reports_sizes() {
    let (code, stdout, _) = spverify(&["run", "--filter", "lemma-4.9-orbits"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("1440") && stdout.contains("5120"));
}

#[test]
fn markdown_report_to_file() {
    let path = std::env::temp_dir().join(format!("spverify-{}.md", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, _, _) = spverify(&["report", "--filter", "registry-coverage", "--out", p]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.contains("| registry-coverage |"));
}

#[test]
fn list_includes_slow_on_request() {
    let (_, fast, _) = spverify(&["list"]);
    let (_, all, _) = spverify(&["list", "--include-slow"]);
    assert!(!fast.contains("construct-l ") && all.contains("construct-l "));
}
