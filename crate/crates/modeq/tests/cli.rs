use std::process::{Command, Output};

use serde_json::{json, Value};

fn modeq(args: &[&str]) -> Output {
    modeq_env(args, &[])
}

fn modeq_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_modeq"));
    cmd.args(args).env_remove("MODEQ_PRECISION").env_remove("MODEQ_MAX_COSETS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn index_examples() {
    for (q, p, n) in [("inf", "2", 2), ("inf", "3", 4), ("3", "2", 3), ("3", "3", 3)] {
        let o = modeq(&["index", "--q", q, "--p", p, "--json"]);
        assert_eq!(o.status.code(), Some(0));
        let v = json_out(&o);
        assert_eq!(v["index"], n);
        assert_eq!(v["side_check"], true);
        assert_eq!(v["representatives"].as_array().unwrap().len(), n as usize);
    }
}

#[test]
fn coset_cap_exit_code() {
    let o = modeq(&["index", "--q", "3", "--p", "7", "--max-cosets", "4", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_out(&o)["error"]["kind"], "cap_exceeded");
    let o = modeq(&["index", "--q", "3", "--p", "7", "--max-cosets", "10", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["index"], 8);
}

#[test]
fn flags_override_environment() {
    let capped = modeq_env(&["index", "--q", "inf", "--p", "3"], &[("MODEQ_MAX_COSETS", "2")]);
    assert_eq!(capped.status.code(), Some(3));
    let flagged = modeq_env(&["index", "--q", "inf", "--p", "3", "--max-cosets", "16"], &[("MODEQ_MAX_COSETS", "2")]);
    assert_eq!(flagged.status.code(), Some(0));

    let args = ["solve", "--a", "1/3", "--p", "3", "--alpha", "0.5", "--json"];
    let beta = |o: &Output| json_out(o)["beta"].as_f64().unwrap();
    let rounded = |x: f64, sig: usize| format!("{:.*e}", sig - 1, x).parse::<f64>().unwrap();
    let full = beta(&modeq(&args));
    assert_eq!(full, rounded(full, 15));
    assert_ne!(full, rounded(full, 4));
    assert_eq!(beta(&modeq_env(&args, &[("MODEQ_PRECISION", "4")])), rounded(full, 4));
    let mut with_flag = args.to_vec();
    with_flag.extend(["--precision", "6"]);
    assert_eq!(beta(&modeq_env(&with_flag, &[("MODEQ_PRECISION", "4")])), rounded(full, 6));
}

#[test]
fn verify_names_the_single_failure() {
    let o = modeq(&["verify"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let fails: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails.len(), 1, "{text}");
    assert!(fails[0].starts_with("FAIL published polynomial (inf,3)"));
    assert!(text.contains("PASS multiplier (3,2)"));
}

#[test]
fn verify_json_with_one_sample() {
    let o = modeq(&["verify", "--samples", "1", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_out(&o);
    assert_eq!(v["samples"], 1);
    let cases: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["case"].as_str().unwrap()).collect();
    assert_eq!(cases, ["(inf,2)", "(inf,3)", "(3,3)", "(3,2)"]);
    let failed: Vec<&str> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|c| c["checks"].as_array().unwrap())
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["published polynomial (inf,3)"]);
}

#[test]
fn zero_samples_is_a_usage_error() {
    assert_eq!(modeq(&["verify", "--samples", "0"]).status.code(), Some(2));
}

#[test]
fn eliminate_formats() {
    let o = modeq(&["eliminate", "--case", "inf,2", "--json"]);
    let v = json_out(&o);
    assert_eq!(v["terms"], json!([[0, 1, "-16"], [1, 1, "16"], [2, 0, "1"], [2, 1, "-2"], [2, 2, "1"]]));
    assert_eq!(v["matches_published"], true);
    assert_eq!(v["structure"]["square_free_in_y"], true);

    let latex = stdout(&modeq(&["eliminate", "--case", "(inf,2)", "--format", "latex"]));
    assert_eq!(latex.trim(), "x^{2} y^{2} - 2 x^{2} y + 16 x y - 16 y + x^{2}");

    let human = stdout(&modeq(&["eliminate", "--case", "inf,3"]));
    assert!(human.contains("differs from the published polynomial"));
    let v = json_out(&modeq(&["eliminate", "--case", "inf,3", "--format", "json"]));
    assert_eq!(v["matches_published"], false);
    assert_eq!((v["degree_x"].as_u64(), v["degree_y"].as_u64()), (Some(4), Some(4)));
}

#[test]
fn solve_examples() {
    for (p, alpha, beta) in [("3", "7/8", 1.0 / 64.0), ("2", "49/54", 7.0 / 32.0)] {
        let v = json_out(&modeq(&["solve", "--a", "1/3", "--p", p, "--alpha", alpha, "--json"]));
        assert!((v["beta"].as_f64().unwrap() - beta).abs() < 1e-10);
    }
    let o = modeq(&["solve", "--a", "1/3", "--p", "2", "--alpha", "1.5", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json_out(&o)["error"]["kind"], "usage");
}

#[test]
fn param_at_one_half() {
    let v = json_out(&modeq(&["param", "--case", "3,2", "--z", "1/2", "--json"]));
    assert_eq!(v["point"]["alpha"], "49/54");
    assert_eq!(v["point"]["beta"], "7/32");
    assert_eq!(v["point"]["radical_terms"], json!(["7/12", "5/12"]));
    assert_eq!(v["omega_involution"], true);
    assert_eq!(v["phi_divisors"]["multiplicities"], json!([[1, 2], [1, 2], [3]]));
    let o = modeq(&["param", "--case", "3,2", "--z", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn surface_and_membership() {
    let v = json_out(&modeq(&["surface", "--q", "inf", "--p", "3", "--json"]));
    assert_eq!((v["genus"].as_u64(), v["punctures"].as_u64()), (Some(0), Some(6)));
    assert_eq!(v["ramification"]["over_one"], json!([1, 3]));
    assert_eq!(v["actions"]["T"].as_array().unwrap().len(), 4);

    let v = json_out(&modeq(&["membership", "--q", "3", "--p", "2", "--matrix", "1,-sqrt3,2sqrt3,-5", "--json"]));
    assert_eq!((v["in_g"].as_bool(), v["in_k"].as_bool()), (Some(true), Some(true)));
    let v = json_out(&modeq(&["membership", "--q", "inf", "--p", "2", "--word", "V", "--json"]));
    assert_eq!((v["in_g"].as_bool(), v["in_k"].as_bool(), v["coset"].as_u64()), (Some(true), Some(false), Some(1)));
    assert_eq!(modeq(&["membership", "--q", "inf", "--p", "2", "--matrix", "1,1,1,1"]).status.code(), Some(2));
}

#[test]
fn domain_svg() {
    let a = modeq(&["domain-svg", "--case", "inf,2"]);
    let b = modeq(&["domain-svg", "--case", "inf,2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    for label in [">0<", ">1/2<", ">2/3<", ">1<", ">2<", ">∞<"] {
        assert!(svg.contains(label), "{label}");
    }
    assert_eq!(svg.matches(" A ").count(), 4);

    let v = json_out(&modeq(&["domain-svg", "--case", "3,3", "--json"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["closed"], true);

    let o = modeq(&["domain-svg", "--case", "(3,"]);
    assert_eq!(o.status.code(), Some(2));

    let path = std::env::temp_dir().join(format!("modeq-domain-{}.svg", std::process::id()));
    let o = modeq(&["domain-svg", "--case", "3,2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<svg"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn special_functions() {
    let v = json_out(&modeq(&["f21", "--a", "1/2", "--x", "0.25", "--json"]));
    // 2F1(1/2, 1/2; 1; x) = 1/AGM(1, √(1 − x)).
    let (mut g, mut h) = (1.0f64, 0.75f64.sqrt());
    for _ in 0..8 {
        (g, h) = ((g + h) / 2.0, (g * h).sqrt());
    }
    assert!((v["value"].as_f64().unwrap() - 1.0 / g).abs() < 1e-14);
    assert_eq!(v["branch"], "direct-series");
    let v = json_out(&modeq(&["mu", "--r", "0.6", "--json"]));
    assert!(v["mu"].as_f64().unwrap() > 0.0);
    assert_eq!(modeq(&["f21", "--a", "0.7", "--x", "0.5"]).status.code(), Some(2));
    assert_eq!(modeq(&["mu", "--r", "x"]).status.code(), Some(2));
}

#[test]
fn help_and_usage() {
    let o = modeq(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    for cmd in ["index", "membership", "surface", "param", "solve", "eliminate", "verify", "domain-svg", "f21", "mu"] {
        assert!(stdout(&o).contains(cmd), "{cmd}");
    }
    assert_eq!(modeq(&[]).status.code(), Some(2));
    assert_eq!(modeq(&["index", "--q", "inf"]).status.code(), Some(2));
}
