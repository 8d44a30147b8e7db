use std::process::{Command, Output};

use serde_json::Value;

fn ihara(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ihara"))
        .args(args)
        .output()
        .expect("run ihara")
}

fn stdout(args: &[&str]) -> String {
    let out = ihara(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn stderr_of_failure(args: &[&str]) -> String {
    let out = ihara(args);
    assert!(!out.status.success(), "{args:?} unexpectedly succeeded");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(
        err.trim_end().lines().count(),
        1,
        "diagnostic not one line: {err}"
    );
    err
}

#[test]
fn ngc_counts() {
    assert!(stdout(&["ngc", "--name", "utility", "-k", "4"]).contains("N_4 = 72"));
    assert!(stdout(&["ngc", "--name", "utility", "-k", "1"]).contains("N_1 = 0"));
}

#[test]
fn ngc_oracle_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k33.edges");
    let p = path.to_str().unwrap();
    stdout(&["gen", "--name", "utility", "-o", p]);
    let text = stdout(&["ngc", "--file", p, "-k", "4", "--oracle"]);
    assert!(text.contains("N_4 = 72 (ladder)"));
    assert!(text.contains("trace(W^4) = 72 (oracle)"));
    assert!(text.contains("match"));
}

#[test]
fn hseq_values() {
    assert!(stdout(&["hseq", "--name", "utility", "-k", "4"]).contains("H_4 = -9/4 (-2.25)"));
    let rows = stdout(&["hseq", "--name", "utility", "-k", "2..6"]);
    assert_eq!(rows.lines().filter(|l| l.starts_with("H_")).count(), 5);
    let chv = json(&["hseq", "--name", "chvatal", "-k", "1..20"]);
    let values = chv["result"]["values"].as_array().unwrap();
    assert_eq!(values.len(), 20);
    assert!(values.iter().all(|v| v["nonnegative"] == true));
}

#[test]
fn estimate_verdicts() {
    let u = stdout(&["estimate", "--name", "utility", "--epsilon", "0.0625"]);
    assert!(u.contains("false, mu ≈ 2.121320196"), "{u}");
    let c = stdout(&["estimate", "--name", "chvatal", "--epsilon", "0.5"]);
    assert!(c.contains("true, nil"), "{c}");
    let cube = json(&["estimate", "--name", "cube", "--epsilon", "2^-2"]);
    assert_eq!(cube["result"]["within_bound"], true);
    let est = cube["result"]["estimate"].as_f64().unwrap();
    assert!((est - 2.108316962).abs() < 1e-5);
}

#[test]
fn text_and_json_share_numbers() {
    let text = stdout(&["table", "--name", "utility"]);
    let report = json(&["table", "--name", "utility"]);
    for row in report["result"]["rows"].as_array().unwrap() {
        let est = row["estimate_text"].as_str().unwrap();
        let eps = row["epsilon"].as_str().unwrap();
        assert!(
            text.lines().any(|l| l.starts_with(eps) && l.ends_with(est)),
            "{eps} {est} missing from text"
        );
    }
    let text = stdout(&["--precision", "6", "oracle", "--name", "utility"]);
    let report = json(&["--precision", "6", "oracle", "--name", "utility"]);
    assert_eq!(report["result"]["mu"], "2.12132");
    assert!(text.contains("mu = 2.12132\n"));
}

#[test]
fn json_envelope() {
    let report = json(&["ngc", "--name", "cube", "-k", "6"]);
    assert_eq!(report["command"], "ngc");
    assert_eq!(report["graph"]["n"], 8);
    assert_eq!(report["graph"]["q"], 2);
    assert_eq!(report["graph"]["source"], "name:cube");
    assert!(report["elapsed_ms"].as_f64().is_some());
}

#[test]
fn oracle_reports() {
    let u = json(&["oracle", "--name", "utility"]);
    let eig: Vec<&str> = u["result"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(eig, ["3", "0", "0", "0", "0", "-3"]);
    let mu: f64 = u["result"]["mu"].as_str().unwrap().parse().unwrap();
    assert!((mu - 2.121320343).abs() < 1e-8);
    assert_eq!(u["result"]["bounds_hold"], false);

    let c = json(&["oracle", "--name", "chvatal"]);
    assert_eq!(c["result"]["is_ramanujan"], true);
    assert_eq!(c["result"]["bounds_hold"], true);

    let cycle = json(&["oracle", "--name", "cycle(4)"]);
    assert_eq!(cycle["graph"]["q"], 1);
}

#[test]
fn table_shapes() {
    for name in ["utility", "cube", "chvatal"] {
        let report = json(&["table", "--name", name]);
        assert_eq!(report["result"]["rows"].as_array().unwrap().len(), 10);
    }
    let chv = stdout(&["table", "--name", "chvatal"]);
    assert_eq!(
        chv.lines()
            .filter(|l| l.ends_with("| true        | nil"))
            .count(),
        10
    );
}

#[test]
fn gen_writes_valid_files() {
    let dir = tempfile::tempdir().unwrap();
    let chv = dir.path().join("chv.edges");
    stdout(&["gen", "--name", "chvatal", "-o", chv.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&chv).unwrap().lines().count(), 24);

    let r = dir.path().join("r.edges");
    let p = r.to_str().unwrap();
    stdout(&["gen", "--random", "10", "2", "--seed", "3", "-o", p]);
    let report = json(&["ngc", "--file", p, "-k", "3"]);
    assert_eq!(report["graph"]["n"], 10);
    assert_eq!(report["graph"]["q"], 2);
}

#[test]
fn errors_are_one_line() {
    assert!(stderr_of_failure(&["gen", "--random", "5", "2"]).contains("odd"));
    stderr_of_failure(&["ngc", "--name", "nonesuch", "-k", "2"]);
    stderr_of_failure(&["ngc", "--file", "/nonexistent/graph.edges", "-k", "2"]);
    stderr_of_failure(&["ngc", "-k", "2"]);
    stderr_of_failure(&["ngc", "--name", "utility", "-k", "0"]);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "0 1\n1 2\n").unwrap();
    stderr_of_failure(&["ngc", "--file", bad.to_str().unwrap(), "-k", "2"]);
    std::fs::write(&bad, "0 1\n0 1\n").unwrap();
    stderr_of_failure(&["ngc", "--file", bad.to_str().unwrap(), "-k", "2"]);
}
