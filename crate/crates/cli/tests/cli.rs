//! End-to-end tests of the binary: exit codes, report structure, and the
//! zero-cache file contract.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_heatspec"));
    cmd.args(args);
    if let Some(dir) = cache {
        cmd.env("HEATSPEC_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn relations_pass_with_exit_zero() {
    let out = run(&["relations"], None);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("overall: PASS"));
    assert!(text.contains("(11) 11"));
}

#[test]
fn relations_json_has_stable_keys() {
    let out = run(&["relations", "--json"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "relations");
    assert!(v["verdicts"].as_array().unwrap().len() >= 30);
    assert!(v["values"].as_array().is_some());
    assert!(v["timings"]["total_ms"].is_number());
    for verdict in v["verdicts"].as_array().unwrap() {
        assert_eq!(verdict["pass"], true);
        assert_eq!(verdict["detail"], "residual = 0");
    }
}

#[test]
fn tampered_relations_fail_with_exit_one() {
    let out = run(&["relations", "--tamper", "12"], None);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    // group 11 does not involve d12 and must keep passing
    assert!(text.contains("[pass] (11) 11"));
}

#[test]
fn coeffs_symbolic_and_at_m4() {
    let out = run(&["coeffs", "--symbolic"], None);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("d12"));
    assert!(text.contains("b"));

    let out = run(&["coeffs", "--m", "4", "--json"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 31);
    // e0 at m = 4 is β/16 = 1/(12π)
    let e0 = values.iter().find(|x| x["name"] == "e0").unwrap();
    assert_eq!(e0["exact"], "1/12*pi^(-1)");
}

#[test]
fn coeffs_pole_guard_below_four() {
    let out = run(&["coeffs", "--m", "3"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pole"));
}

#[test]
fn ball_exact_m4_passes() {
    let out = run(&["ball", "--m", "4", "--mode", "exact", "--json"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for verdict in v["verdicts"].as_array().unwrap() {
        assert_eq!(verdict["pass"], true, "{verdict}");
    }
    let a3 = &v["values"].as_array().unwrap()[0];
    assert!((a3["float"].as_f64().unwrap() - 0.0827587403327).abs() < 1e-12);
}

#[test]
fn ball_smeared_exact_identity() {
    let out = run(
        &[
            "ball", "--m", "4", "--mode", "exact", "--f0", "1", "--f1", "1", "--f2", "1",
        ],
        None,
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("smeared residue route = density route"));
}

#[test]
fn ball_odd_dimension_rejected() {
    let out = run(&["ball", "--m", "5", "--mode", "exact"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zeros_cache_contract() {
    let dir = std::env::temp_dir().join(format!("heatspec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let out = run(&["zeros", "--m", "4", "--xmax", "30"], Some(&dir));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let file = dir.join("zeros-m4-x30.txt");
    let content = std::fs::read_to_string(&file).unwrap();
    assert!(content.starts_with("heatspec-zeros v1 m=4 xmax=30\n"));
    let second = content.lines().nth(1).unwrap();
    assert!(second.starts_with("1 1 3.83170597020751"));

    // reread: bit-identical cache, reported as loaded
    let out2 = run(&["zeros", "--m", "4", "--xmax", "30", "--json"], Some(&dir));
    assert!(out2.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out2)).unwrap();
    assert!(v["verdicts"][0]["detail"]
        .as_str()
        .unwrap()
        .contains("Loaded"));
    assert_eq!(std::fs::read_to_string(&file).unwrap(), content);

    // corruption: detected and rebuilt
    std::fs::write(&file, content.replacen("3.8317", "3.9317", 1)).unwrap();
    let out3 = run(&["zeros", "--m", "4", "--xmax", "30", "--json"], Some(&dir));
    assert!(out3.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out3)).unwrap();
    assert!(v["verdicts"][0]["detail"]
        .as_str()
        .unwrap()
        .contains("RebuiltAfterCorruption"));
    assert_eq!(std::fs::read_to_string(&file).unwrap(), content);

    // --refresh forces a rebuild
    let out4 = run(
        &["zeros", "--m", "4", "--xmax", "30", "--refresh", "--json"],
        Some(&dir),
    );
    assert!(out4.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out4)).unwrap();
    assert!(v["verdicts"][0]["detail"]
        .as_str()
        .unwrap()
        .contains("BuiltFresh"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ball_smeared_numeric_cross_check() {
    // numeric extraction of the smeared third coefficient against the exact
    // smeared residue value, sharing one cache with the plain numeric test
    let dir = std::env::temp_dir().join(format!("heatspec-cli-sm-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = run(
        &[
            "ball", "--m", "4", "--mode", "both", "--f1", "1", "--f2", "1", "--json",
        ],
        Some(&dir),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let names: Vec<&str> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"smeared residue route = density route"));
    assert!(names.iter().any(|n| n.starts_with("a3 within")));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ball_numeric_m4_within_tolerances() {
    let dir = std::env::temp_dir().join(format!("heatspec-cli-num-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = run(
        &["ball", "--m", "4", "--mode", "numeric", "--json"],
        Some(&dir),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for verdict in v["verdicts"].as_array().unwrap() {
        assert_eq!(verdict["pass"], true, "{verdict}");
    }
    // determinism given identical cache: values repeat bit-for-bit
    let out2 = run(
        &["ball", "--m", "4", "--mode", "numeric", "--json"],
        Some(&dir),
    );
    let v2: serde_json::Value = serde_json::from_str(&stdout(&out2)).unwrap();
    assert_eq!(v["values"], v2["values"]);
    std::fs::remove_dir_all(&dir).ok();
}
