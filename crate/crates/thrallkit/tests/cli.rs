use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn thrallkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thrallkit"))
        .args(args)
        .env_remove("THRALLKIT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn dims_in_the_plane() {
    let out = thrallkit(&["dims", "--d", "2", "--k", "3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["lie_dims"], serde_json::json!([2, 1, 2]));
}

#[test]
fn lyndon_words() {
    let v = stdout_json(&thrallkit(&["lyndon", "--d", "2", "--k", "3"]));
    assert_eq!(v["words"], serde_json::json!(["1", "2", "12", "112", "122"]));
}

#[test]
fn idempotent_coefficients() {
    let v = stdout_json(&thrallkit(&["idempotent", "--k", "3", "--partition", "3"]));
    let terms = v["element"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 6);
    let coeff = |cycles: &str| {
        terms.iter().find(|t| t["permutation"] == cycles).map(|t| t["coefficient"].as_str().unwrap().to_string())
    };
    assert_eq!(coeff("id").as_deref(), Some("1/3"));
    assert_eq!(coeff("(13)").as_deref(), Some("1/3"));
    assert_eq!(coeff("(123)").as_deref(), Some("-1/6"));
    let v = stdout_json(&thrallkit(&["idempotent", "--k", "3", "--partition", "2,1", "--intersect-mu", "1,1,1"]));
    assert_eq!(v["element"]["terms"].as_array().unwrap().len(), 6);
}

#[test]
fn resource_guard_and_usage_errors() {
    assert_eq!(thrallkit(&["idempotent", "--k", "6", "--partition", "6"]).status.code(), Some(3));
    assert_eq!(thrallkit(&["invariants", "--d", "2", "--ell", "3"]).status.code(), Some(3));
    assert_eq!(thrallkit(&["idempotent", "--k", "3", "--partition", "2,2"]).status.code(), Some(2));
    assert_eq!(thrallkit(&["idempotent", "--k", "3", "--partition", "x"]).status.code(), Some(2));
    assert_eq!(thrallkit(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn staircase_signature() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "staircase.json", r#"{"points": [[0, 0], [1, 0], ["1", "1"]]}"#);
    let out = thrallkit(&["signature", "--path", &path, "--level", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["levels"][2]["12"], "1");
    assert_eq!(v["levels"][2]["11"], "1/2");
    assert!(v["levels"][2].get("21").is_none());
    let log = stdout_json(&thrallkit(&["signature", "--path", &path, "--level", "2", "--log"]));
    assert_eq!(log["levels"][2]["12"], "1/2");
    assert_eq!(log["levels"][2]["21"], "-1/2");
}

#[test]
fn malformed_input_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"points": [[0, 0], [1, 0.5]]}"#);
    let out = thrallkit(&["signature", "--path", &bad, "--level", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("points[1][1]"));
    let bad = write(dir.path(), "tensor.json", r#"{"dim": 2, "order": 2, "entries": {"13": "1"}}"#);
    let out = thrallkit(&["check", "symmetric", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("entries.\"13\""));
    let missing = write(dir.path(), "missing.json", r#"{"dim": 2, "entries": {}}"#);
    let out = thrallkit(&["check", "symmetric", "--input", &missing]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("`order`"));
    let not_json = write(dir.path(), "nope.json", "{");
    assert_eq!(thrallkit(&["check", "lie", "--input", &not_json]).status.code(), Some(2));
}

#[test]
fn checks_exit_with_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let straight = write(dir.path(), "line.json", r#"{"points": [[0, 0], [1, 2], [3, 6]]}"#);
    let stairs = write(dir.path(), "stairs.json", r#"{"points": [[0, 0], [1, 0], [1, 1]]}"#);
    let out = thrallkit(&["check", "fls", "--input", &straight]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["criterion_a"], true);
    assert_eq!(v["criterion_c"], true);
    let out = thrallkit(&["check", "fls", "--input", &stairs, "--level", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["witness"]["first_failure"], 2);

    let sym = write(dir.path(), "sym.json", r#"{"dim": 2, "order": 2, "entries": {"12": "1", "21": "1"}}"#);
    assert_eq!(thrallkit(&["check", "symmetric", "--input", &sym]).status.code(), Some(0));
    let out = thrallkit(&["check", "rank1", "--input", &sym]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["asserted_in_u"], false);
    let bracket = write(dir.path(), "bracket.json", r#"{"dim": 2, "order": 2, "entries": {"12": "1", "21": "-1"}}"#);
    assert_eq!(thrallkit(&["check", "lie", "--input", &bracket]).status.code(), Some(0));
    assert_eq!(thrallkit(&["check", "lie", "--input", &sym]).status.code(), Some(1));
    let power = write(dir.path(), "power.json", r#"{"dim": 2, "order": 2, "entries": {"11": "4", "12": "2", "21": "2", "22": "1"}}"#);
    let out = thrallkit(&["check", "rank1", "--input", &power, "--assert-in-u"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["factors"][1], serde_json::json!(["1", "1/2"]));
}

#[test]
fn group_likeness_of_a_signature_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p.json", r#"{"points": [[0, 0], [2, 1], [1, 3]]}"#);
    let sig = thrallkit(&["signature", "--path", &path, "--level", "3"]);
    let sig_path = write(dir.path(), "sig.json", std::str::from_utf8(&sig.stdout).unwrap());
    assert_eq!(thrallkit(&["check", "group-like", "--input", &sig_path]).status.code(), Some(0));
    let tampered = write(
        dir.path(),
        "bad_sig.json",
        r#"{"dim": 1, "k_max": 2, "levels": [{"": "1"}, {"1": "1"}, {"11": "1"}]}"#,
    );
    let out = thrallkit(&["check", "group-like", "--input", &tampered]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_json(&out)["violation"].is_object());
}

#[test]
fn output_is_deterministic() {
    let args = ["invariants", "--d", "2", "--ell", "2", "--threads", "2"];
    let a = thrallkit(&args);
    let b = thrallkit(&["invariants", "--d", "2", "--ell", "2", "--threads", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["dims"]["(3,1)"], 1);
    assert_eq!(v["lie_invariant_dim"], 0);
    let first = thrallkit(&["thrall-coeffs", "--k", "5"]);
    let second = thrallkit(&["thrall-coeffs", "--k", "5"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn decompose_a_tensor() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.json", r#"{"dim": 2, "order": 2, "entries": {"12": "1"}}"#);
    for backend in ["idempotent", "basis"] {
        let v = stdout_json(&thrallkit(&["decompose", "--tensor", &t, "--backend", backend]));
        let components = v["components"].as_array().unwrap();
        let part = |l: serde_json::Value| components.iter().find(|c| c["lambda"] == l).unwrap()["tensor"]["entries"].clone();
        assert_eq!(part(serde_json::json!([2])), serde_json::json!({"12": "1/2", "21": "-1/2"}));
        assert_eq!(part(serde_json::json!([1, 1])), serde_json::json!({"12": "1/2", "21": "1/2"}));
    }
}

#[test]
fn hdet_and_paper_suite() {
    let out = thrallkit(&["hdet-pullback", "--seed", "3", "--samples", "20"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["constant"], "1/3");
    let out = thrallkit(&["paper-suite", "--format", "text"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn cache_directory_is_populated() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_thrallkit"))
            .args(["idempotent", "--k", "3", "--partition", "2,1"])
            .env("THRALLKIT_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(dir.path().join("idempotent-k3-2_1.json").exists());
    assert!(dir.path().join("idempotent-k3-1_1_1.json").exists());
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}
