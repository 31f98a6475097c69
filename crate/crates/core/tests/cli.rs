use std::path::PathBuf;
use std::process::{Command, Output};

fn subres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subres")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("subres-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn sres_from_coefficients_and_roots() {
    let o = subres(&["sres", "--f=-2,0,1", "--g", "1,1", "--d", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Sres_0 = -1\n");

    // f = x(x-1)^2, g = (x-2)^3: Sres_2 = g - f.
    let o = subres(&["sres", "--a", "0:1,1:2", "--b", "2:3", "--d", "2", "--json"]);
    assert_eq!(stdout(&o).trim(), r#"{"coeffs":["-8","11","-4"]}"#);
}

#[test]
fn sylm_matches_sres_and_traces() {
    let o = subres(&["sylm", "--a", "0:1,1:2", "--b", "2:3", "--d", "2"]);
    assert_eq!(stdout(&o), "SylM_2,0 = -4*x^2 + 11*x - 8\n");

    let o = subres(&["sylm", "--a", "0:1,1:2", "--b", "2:3", "--d", "2", "--trace", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["result"]["coeffs"][0], "-8");
    for t in v["terms"].as_array().unwrap() {
        for key in ["r1", "r2", "r3", "a_prime", "b_prime", "sign", "value"] {
            assert!(t.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn forced_two_index_formula_is_flagged_and_differs() {
    let o = subres(&["sylm", "--a", "0:1,1:2", "--b", "2:3", "--d", "2", "--force-bigd"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert_ne!(stdout(&o), "SylM_2,0 = -4*x^2 + 11*x - 8\n");
}

#[test]
fn sylvester_sums_and_schur() {
    let o = subres(&["syl-single", "--a", "1,2,3", "--b", "4,5", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = subres(&["syl-double", "--a", "1,2,3", "--b", "4,5", "--p", "1", "--q", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&subres(&["schur", "--k", "3", "--rows", "2", "--points", "2,5"])), "S = 7\n");
    let o = subres(&["schur", "--k", "3", "--rows", "2", "--points", "2", "--with-x"]);
    assert_eq!(stdout(&o), "S = x + 2\n");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["sylm", "--a", "1:0", "--b", "2", "--d", "0"][..],
        &["sres", "--a", "1,2", "--b", "3,4", "--d", "2"],
        &["verify", "no-such-suite"],
        &["schur", "--k", "2", "--points", "1/0"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(subres(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "thm14", "--count", "12", "--seed", "7", "--json"];
    let a = subres(&args);
    let b = subres(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = subres(&["verify", "thm14", "--count", "12", "--seed", "8", "--json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn failing_instance_exits_1_and_replays() {
    // Coinciding alpha1 = alpha2 is not a valid instantiation, so it fails.
    let inst = r#"{"suite":"examples","kind":"square-b","alpha1":"1","alpha2":"1","beta1":"2"}"#;
    let path = temp_file("bad.json", inst);
    let o = subres(&["--replay", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));

    // The failure record in that report replays to the same failure.
    let report = temp_file("report.json", &stdout(&o));
    let again = subres(&["--replay", report.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(1));
    assert!(stdout(&again).contains("FAIL replay: 1 instances"));

    let good = temp_file(
        "good.json",
        r#"{"suite":"thm14","a":{"roots":[{"value":"1","mult":2}]},"b":{"roots":[{"value":"1/2","mult":3}]}}"#,
    );
    assert_eq!(subres(&["--replay", good.to_str().unwrap()]).status.code(), Some(0));
    for p in [path, report, good] {
        let _ = std::fs::remove_file(p);
    }
}
