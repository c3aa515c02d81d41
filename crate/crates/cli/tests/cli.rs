use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfgraft"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

/// Compare stdout byte-for-byte with `tests/golden/<name>`. Set
/// `HOPFGRAFT_BLESS=1` to rewrite the file instead.
fn golden(name: &str, out: &Output) {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    if std::env::var_os("HOPFGRAFT_BLESS").is_some() {
        std::fs::write(&p, &out.stdout).unwrap();
    }
    let want = std::fs::read(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&want), "golden {name}");
}

const B0: [&str; 6] = ["--tau", "0,1", "--u", "-0.7071067811865476", "--v", "0.5773502691896258"];

#[test]
fn reduce_matches_gauss_reduction() {
    let out = run(&["reduce", "--tau", "2.7,0.8"]);
    assert!(out.status.success());
    let v = json(&out);
    let t = &v["result"]["tau_reduced"];
    assert!((t[0].as_f64().unwrap() - 0.410_958_904_109_589).abs() < 1e-12);
    assert!((t[1].as_f64().unwrap() - 1.095_890_410_958_904).abs() < 1e-12);
    assert_eq!(v["result"]["matrix"], serde_json::json!([[0, -1], [1, -3]]));
    golden("reduce.json", &out);
}

#[test]
fn motivic_nine_points() {
    let out = run(&["motivic", "blowup-p2", "--points", "9"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["result"]["coefficients"], serde_json::json!([1, 10, 1]));
    golden("motivic.json", &out);
}

#[test]
fn jinv_at_i() {
    let v = json(&run(&["jinv", "--tau", "0,1"]));
    assert!((v["result"]["j"][0].as_f64().unwrap() - 1728.0).abs() < 1e-9);
}

#[test]
fn torsion_source_exits_two() {
    let out = run(&["cobordants", "--tau", "0,1", "--u", "1/3", "--v", "1/2", "--count", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["hypothesis"], "non-torsion");
    assert_eq!(v["error"]["message"], "normal bundle torsion (order 6)");
    golden("cobordants_torsion.json", &out);
}

#[test]
fn six_digit_decimal_is_torsion_of_large_order() {
    // 0.333333 is exactly 333333/10^6, inside the default denominator bound
    let out = run(&["cobordants", "--tau", "0,1", "--u", "0.333333", "--v", "0.5", "--count", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["message"], "normal bundle torsion (order 1000000)");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["reduce", "--tau", "1"]).status.code(), Some(64));
    assert_eq!(run(&["reduce"]).status.code(), Some(64));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(run(&["reduce", "--tau", "0,1", "--format", "xml"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn precondition_errors_exit_two() {
    let out = run(&["reduce", "--tau", "0,-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["hypothesis"], "upper-half-plane");
    let out = run(&["torsion", "--tau", "0,1", "--u", "0.1", "--v", "0.2", "--bound", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["to-hopf", "--tau", "0,1", "--u", "-0.5", "--v", "0", "--u-rep", "-0.25"]);
    assert_eq!(json(&out)["error"]["hypothesis"], "congruent-representative");
    let out = run(&["nine-points", "--config", &data("nine_eight.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["hypothesis"], "valid-config");
    let out = run(&["nine-points", "--config", "/nonexistent/config.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hopf_conversions() {
    let v = json(&run(&["to-hopf", "--tau", "0,1", "--u", "-1/2", "--v", "0"]));
    assert_eq!(v["result"]["bundle"]["fiber_exp"], serde_json::json!([0.0, 0.5]));
    let v = json(&run(&["from-hopf", "--tau", "0,1", "--sigma", "0.5,0.5"]));
    assert_eq!(v["result"]["u"], -0.5);
    assert_eq!(v["result"]["v"], 0.5);
}

#[test]
fn classification_commands_carry_bounds() {
    let out = run(&["classify-hopf", "--lambda", "0,1", "--mu", "0,2", "--bound", "5"]);
    let v = json(&out);
    assert_eq!(v["result"]["classification"]["relation"], serde_json::json!([2, 1]));
    assert!(v["warnings"][0].as_str().unwrap().contains("5"));
    golden("classify_hopf.json", &out);
    let v = json(&run(&["joint-hopf", "--tauE", "0,1", "--tauF", "0.70711,0.42265"]));
    assert_eq!(v["result"]["classification"]["kind"], "two-curves");
    assert_eq!(v["result"]["classification"]["bound"], 50);
}

#[test]
fn cobordants_report_shape_and_determinism() {
    let mut args = vec!["cobordants"];
    args.extend(B0);
    args.extend(["--count", "6", "--nmax", "1000"]);
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let reports = v["result"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert_eq!(reports[0]["relation"], "identity");
    for key in [
        "move",
        "graft_exponent",
        "graft_reduced",
        "graft_j",
        "target_bundle",
        "torsion",
        "diophantine",
        "isogeny_to_source",
    ] {
        assert!(reports[1].get(key).is_some(), "missing {key}");
    }
    let w: Vec<&str> = v["warnings"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    assert!(w.iter().any(|s| s.contains("1000000")));
    assert!(w.iter().any(|s| s.contains("1000")));
    assert!(w.iter().any(|s| s.contains("20")));
}

#[test]
fn cobordants_csv_projection() {
    let mut args = vec!["cobordants"];
    args.extend(B0);
    args.extend(["--count", "4", "--nmax", "500", "--format", "csv"]);
    let out = run(&args);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        lines[0],
        "move_k,move_l,move_m,move_n,r,neg,graft_re,graft_im,j_re,j_im,torsion,dioph_verdict,isog_degree"
    );
    assert_eq!(lines.len(), 5);
    assert!(text.lines().any(|l| l.starts_with("# warning:")));
    assert!(lines[1].starts_with("1,0,0,1,0,false,0.0,1.0,"));
    let j_re: f64 = lines[1].split(',').nth(8).unwrap().parse().unwrap();
    assert!((j_re - 1728.0).abs() < 1e-9);
}

#[test]
fn flat_csv_for_other_commands() {
    let out = run(&["reduce", "--tau", "2.7,0.8", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("key,value"));
    assert!(text.contains("matrix.1.1,-3"));
    golden("reduce.csv", &run(&["reduce", "--tau", "2.7,0.8", "--format", "csv"]));
}

#[test]
fn duals_and_compactifications() {
    let mut args = vec!["duals"];
    args.extend(B0);
    args.extend(["--count", "3", "--nmax", "500", "--max-degree", "0"]);
    let v = json(&run(&args));
    assert_eq!(v["result"].as_array().unwrap().len(), 3);
    assert!(v["result"][0]["isogeny_to_source"].is_null());

    let mut args = vec!["compactifications"];
    args.extend(B0);
    args.extend(["--count", "6", "--max-primary", "2"]);
    let v = json(&run(&args));
    let kinds: Vec<&str> = v["result"].as_array().unwrap().iter().map(|r| r["kind"].as_str().unwrap()).collect();
    assert_eq!(
        kinds,
        ["ruled", "primary-hopf", "primary-hopf", "secondary-hopf", "secondary-hopf", "secondary-hopf"]
    );
}

#[test]
fn nine_points_and_structures() {
    let out = run(&["nine-points", "--config", &data("nine_zero_sum.json")]);
    let v = json(&out);
    assert_eq!(v["result"]["torsion"]["order"], 1);
    let out = run(&["structures", "--config", &data("nine_zero_sum.json"), "--count", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["message"], "normal bundle torsion (order 2)");

    let out = run(&["structures", "--config", &data("nine_generic.json"), "--count", "5", "--nmax", "1000"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"].as_array().unwrap().len(), 5);
    assert_eq!(v["result"][0]["relation"], "identity");
}

#[test]
fn k0_witness_command() {
    let args = ["k0an-witness", "--tauE", "0,1", "--tauF", "0,1.5"];
    let a = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, run(&args).stdout);
    let v = json(&a);
    assert_eq!(v["result"]["outcome"], "witness");
    assert!(v["result"]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let v = json(&run(&["k0an-witness", "--tauE", "0,1", "--tauF", "0,1", "--budget", "0"]));
    assert_eq!(v["result"]["outcome"], "identity");
    let v = json(&run(&["k0an-witness", "--tauE", "0,1", "--tauF", "0,1.5", "--budget", "0"]));
    assert_eq!(v["result"]["outcome"], "exhausted");
    let v = json(&run(&["k0an-witness", "--tauE", "0,1", "--tauF", "0,1.5", "--seed", "7"]));
    assert_eq!(v["params"]["seed"], 7);
}
