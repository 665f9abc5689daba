use std::fs;

use gtg::report::validate;
use gtg::run;
use serde_json::Value;

fn gtg(args: &[&str]) -> gtg::Execution {
    run(std::iter::once("gtg").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let ex = gtg(&a);
    assert!(ex.stderr.is_empty(), "{}", ex.stderr);
    let v: Value = serde_json::from_str(&ex.stdout).expect("stdout is one JSON document");
    validate(&v).unwrap();
    (ex.code, v)
}

fn labels(v: &Value) -> Vec<String> {
    v["results"].as_array().unwrap().iter().map(|r| r["label"].as_str().unwrap().to_string()).collect()
}

#[test]
fn usage_errors_exit_2_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "[[1, 2], [3]]").unwrap();
    let bad = bad.to_str().unwrap();
    let missing = dir.path().join("missing").to_str().unwrap().to_string();
    for args in [
        vec!["frobnicate"],
        vec!["search"],
        vec!["search", "--k", "-1"],
        vec!["analyze", "--word", "xq"],
        vec!["trace", "--word", ""],
        vec!["verify", "--suite", "lemma99"],
        vec!["snf", "--matrix", bad],
        vec!["snf", "--matrix", &missing],
        vec!["cosets", "--presentation", &missing],
        vec!["reproduce", "--corrupt-constant", "pi"],
    ] {
        let mut a = args.clone();
        a.push("--json");
        let ex = gtg(&a);
        assert_eq!(ex.code, 2, "{:?}", args);
        assert!(ex.stdout.is_empty(), "{:?}: {}", args, ex.stdout);
        assert!(!ex.stderr.is_empty());
    }
}

#[test]
fn help_and_version() {
    assert_eq!(gtg(&["--help"]).code, 0);
    assert!(gtg(&["--version"]).stdout.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn words_and_trace() {
    let (code, v) = json(&["words", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(labels(&v), ["xy", "xy2"]);
    let (code, v) = json(&["trace", "--word", "xy"]);
    assert_eq!(code, 0);
    let t = &v["results"][0]["data"];
    assert_eq!(t["word"], "xy");
    assert_eq!(t["k"], 1);
    assert_eq!(t["kappa"], 0);
    assert_eq!(t["degree"], 1);
    // τ(xy) = λ: coefficients [0, 1], each eight "n/d" strings.
    let coeffs = t["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 2);
    assert_eq!(coeffs[1][0], "1/1");
    assert!(coeffs.iter().all(|c| c.as_array().unwrap().len() == 8));
    assert_eq!(v["results"][1]["section"], "sigma");
}

#[test]
fn search_and_analyze() {
    let (code, v) = json(&["search", "--k", "5"]);
    assert_eq!(code, 0);
    let r = &v["results"].as_array().unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["data"]["word"], "xyxyx2y3x2yxy3");
    assert_eq!(r[0]["data"]["verdict"]["outcome"]["rule"], "L3.3");

    let (code, v) = json(&["search", "--k", "1"]);
    assert_eq!(code, 0);
    let outcomes: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["data"]["display"].as_str().unwrap_or("")).collect();
    assert_eq!(outcomes, ["", "FreeSubgroup(Amalgam)"]);
    assert_eq!(v["results"][0]["data"]["verdict"]["display"], "VirtuallySoluble(S4)");

    // The k = 3 survivor reaches the branch the rules call impossible.
    let (code, v) = json(&["search", "--k", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["data"]["verdict"]["error"], "InternalContradiction");

    let (code, v) = json(&["analyze", "--word", "x2y3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["data"]["outcome"]["kind"], "VirtuallySoluble");
    assert_eq!(v["results"][0]["data"]["word"], "xy");
    let (code, v) = json(&["analyze", "--word", "xyxy"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["data"]["error"], "ProperPower");
}

#[test]
fn search_content_ignores_jobs() {
    let a = json(&["search", "--k", "5", "--jobs", "1"]).1;
    let b = json(&["search", "--k", "5", "--jobs", "3"]).1;
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn verify_suites() {
    let (code, v) = json(&["verify", "--suite", "mod12,cells", "--suite", "k1"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["failed"], 0);
    let (code, v) = json(&["verify", "--suite", "lemma31", "--word", "xyx2y"]);
    assert_eq!(code, 0);
    assert!(v["summary"]["passed"].as_u64().unwrap() > 10);
    let (code, v) = json(&["verify", "--suite", "k5"]);
    assert_eq!(code, 1);
    assert_eq!(v["failures"].as_array().unwrap().len(), 1);
    assert!(v["notes"][0].as_str().unwrap().contains("necessary-condition"));
}

#[test]
fn witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let absent = dir.path().join("none.json");
    let (_, v) = json(&["verify", "--suite", "k5", "--witness-path", absent.to_str().unwrap()]);
    assert!(v["notes"][0].as_str().unwrap().contains("no F2 witness at"));
    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{\"subgroup\": 3}").unwrap();
    let ex = gtg(&["verify", "--suite", "k5", "--witness-path", broken.to_str().unwrap(), "--json"]);
    assert_eq!(ex.code, 2);
    assert!(ex.stdout.is_empty());
}

#[test]
fn cosets_and_snf() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("s4.txt");
    fs::write(&p, "# the octahedral group\ngens: x, y; rels: x^3, y^4, (x*y)^2\n").unwrap();
    let p = p.to_str().unwrap();
    let (code, v) = json(&["cosets", "--presentation", p]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["data"]["index"], 24);
    let (_, v) = json(&["cosets", "--presentation", p, "--subgroup", "y"]);
    assert_eq!(v["results"][0]["data"]["index"], 6);
    let (_, v) = json(&["cosets", "--presentation", p, "--max-index", "4"]);
    let idx: Vec<u64> = v["results"].as_array().unwrap().iter().map(|r| r["data"]["index"].as_u64().unwrap()).collect();
    assert_eq!(idx, [1, 2, 3, 4]);
    let ex = gtg(&["cosets", "--presentation", p, "--max-cosets", "10"]);
    assert_eq!(ex.code, 2);

    let m = dir.path().join("m.json");
    fs::write(&m, r#"{"cols": 3, "rows": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]}"#).unwrap();
    let (code, v) = json(&["snf", "--matrix", m.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["data"], serde_json::json!(["2", "6", "12"]));
    assert_eq!(v["results"][1]["data"]["display"], "Z/2 + Z/6 + Z/12");
}

#[test]
fn reproduce_negative_control() {
    let (code, v) = json(&["reproduce"]);
    assert_eq!(code, 1);
    let base: Vec<String> = serde_json::from_value(v["failures"].clone()).unwrap();
    for name in gtg::reproduce::CORRUPTIBLE {
        let (code, v) = json(&["reproduce", "--corrupt-constant", name]);
        assert_eq!(code, 1);
        let failures: Vec<String> = serde_json::from_value(v["failures"].clone()).unwrap();
        let new: Vec<&String> = failures.iter().filter(|f| !base.contains(f)).collect();
        assert_eq!(new.len(), 1, "{}: {:?}", name, failures);
    }
}

#[test]
fn text_output_derives_from_report() {
    let ex = gtg(&["verify", "--suite", "k1"]);
    assert_eq!(ex.code, 0);
    assert!(ex.stdout.contains("PASS xy -> VirtuallySoluble(S4)"));
    assert!(ex.stdout.ends_with("verify: 2 items, 2 passed, 0 failed\n"));
}
