//! End-to-end checks of the `cnt` binary: output content, determinism,
//! and exit codes.

use std::process::{Command, Output};

fn cnt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cnt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn describe_json_reports_invariants() {
    let out = cnt(&["describe", "--c", "10,-2,-8"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["version"], "1");
    assert_eq!(v["command"], "describe");
    let ch = &v["chirality"];
    assert_eq!(ch["n"], 2);
    assert_eq!(ch["q_tilde"], 14);
    assert_eq!(ch["c_tilde"], serde_json::json!([5, -1, -4]));
    assert_eq!(ch["t"], serde_json::json!([-1, 3, -2]));
    assert_eq!(ch["w"], serde_json::json!([1, 0, -1]));
    assert_eq!(ch["class"], "chiral");
    assert_eq!(v["payload"]["metallic"], true);
}

#[test]
fn describe_accepts_two_axes_input() {
    let direct = cnt(&["describe", "--c", "10,-2,-8"]);
    let hamada = cnt(&["describe", "--hamada", "8,2"]);
    assert!(hamada.status.success());
    let d: serde_json::Value = serde_json::from_str(&stdout(&direct)).unwrap();
    let h: serde_json::Value = serde_json::from_str(&stdout(&hamada)).unwrap();
    assert_eq!(d["chirality"]["c"], h["chirality"]["c"]);
}

#[test]
fn describe_zigzag_warns() {
    let out = cnt(&["describe", "--c", "1,0,-1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["chirality"]["class"], "zigzag");
    assert!(v["payload"]["warning"]
        .as_str()
        .unwrap()
        .contains("symmetry-group operations are unavailable"));
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["describe", "--c", "1,2,3"][..],
        &["describe", "--c", "1,2"],
        &["describe", "--c", "0,0,0"],
        &["describe"],
        &["describe", "--c", "2000000,-1000000,-1000000"],
        &["bands", "--c", "10,-2,-8", "--samples", "1"],
    ] {
        let out = cnt(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
    }
}

#[test]
fn unwritable_path_exits_3() {
    let out = cnt(&[
        "bands",
        "--c",
        "10,-2,-8",
        "--samples",
        "4",
        "--out",
        "/nonexistent-dir/bands.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn cg_precondition_exits_4() {
    let out = cnt(&["cg", "--c", "10,-2,-8", "--k", "0.1,0.2,-0.3", "--kprime", "0.1,0.1,-0.2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k ="));
}

#[test]
fn bands_csv_schema_and_determinism() {
    let args = ["bands", "--c", "10,-2,-8", "--samples", "64", "--format", "csv"];
    let a = cnt(&args);
    let b = cnt(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical invocations must be byte-identical");
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "line,param,k0,k1,k2,E_plus,E_minus,lambda"
    );
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 8);
        let e_plus: f64 = fields[5].parse().unwrap();
        assert!((0.0..=3.0 + 1e-12).contains(&e_plus));
    }
}

#[test]
fn bands_scale_with_kappa() {
    let out = cnt(&[
        "bands", "--c", "10,-2,-8", "--samples", "3", "--format", "csv", "--kappa", "2.5",
    ]);
    let text = stdout(&out);
    // the central line passes through k = 0 where E_plus = 3 kappa
    let max: f64 = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(5).unwrap().parse::<f64>().unwrap())
        .fold(0.0, f64::max);
    assert!((max - 7.5).abs() < 1e-9, "max E_plus {max}");
}

#[test]
fn reps_at_origin_prints_unit_characters() {
    let out = cnt(&["reps", "--c", "10,-2,-8", "--k", "0,0,0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["kind"], "one_dimensional");
    for gen in ["rho", "sigma", "tau"] {
        assert_eq!(v["payload"][gen], serde_json::json!([1.0, 0.0]));
    }
}

#[test]
fn reps_generic_point_residuals_small() {
    let out = cnt(&["reps", "--c", "10,-2,-8", "--line", "1", "--param", "0.4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["kind"], "irreducible");
    let m = &v["payload"]["matrices"];
    assert!(m["unitarity_residual"].as_f64().unwrap() < 1e-12);
    assert!(m["relation_residual"].as_f64().unwrap() < 1e-12);
}

#[test]
fn verify_chiral_passes() {
    let out = cnt(&["verify", "--c", "7,-3,-4", "--trials", "50", "--seed", "7"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(stdout(&out).lines().all(|l| l.starts_with("ok")));
}

#[test]
fn verify_armchair_skips_group_suites() {
    let out = cnt(&["verify", "--c", "2,-1,-1", "--trials", "20"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("skip  symgroup-relations"));
    assert!(text.lines().filter(|l| l.starts_with("ok")).count() >= 5);
}
