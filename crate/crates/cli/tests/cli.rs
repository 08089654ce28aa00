use std::process::{Command, Output};

use fsind_cli::{cmd_indicators, Report, RunConfig, Target};

fn fsind(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fsind"));
    for var in ["FSIND_L", "FSIND_K", "FSIND_MAX_M", "FSIND_FORMAT", "FSIND_TOLERANCE", "FSIND_SEED", "FSIND_OUT"] {
        cmd.env_remove(var);
    }
    cmd.args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn structure_json_has_sixteen_classes() {
    let out = fsind(&["--l", "3", "--k", "4", "structure", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.classes.len(), 16);
    assert_eq!(report.params.order, 64);
    let sizes: usize = report.classes.iter().map(|c| c.size).sum();
    assert_eq!(sizes, 64);
}

#[test]
fn structure_text_shows_center() {
    let out = fsind(&["--l", "3", "--k", "4", "structure"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("center: order 4"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fsind(&["--l", "3", "--k", "6", "structure"]).status.code(), Some(2));
    assert_eq!(fsind(&["--l", "2", "--k", "4", "structure"]).status.code(), Some(2));
    assert_eq!(fsind(&["--l", "3", "structure"]).status.code(), Some(2));
    assert_eq!(fsind(&["--l", "3", "--k", "4", "--max-m", "0", "indicators"]).status.code(), Some(2));
    assert_eq!(fsind(&["--l", "3", "--k", "4", "--tolerance", "-1", "verify"]).status.code(), Some(2));
    assert_eq!(fsind(&["--l", "3", "--k", "4", "--format", "yaml", "structure"]).status.code(), Some(2));
    assert_eq!(fsind(&["--l", "3", "--k", "4", "bogus"]).status.code(), Some(2));
}

#[test]
fn env_vars_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_fsind"))
        .env("FSIND_L", "3")
        .env("FSIND_K", "8")
        .env("FSIND_FORMAT", "json")
        .arg("structure")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.params.k, 8);
    assert_eq!(report.classes.len(), 26);
}

#[test]
fn double_indicator_rows() {
    let out = fsind(&["--l", "3", "--k", "4", "indicators", "--target", "double", "--max-m", "16", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.indicators.len(), 232 * 16);
    assert_eq!(report.disagreements(), 0);
    let negative = report.indicators.iter().filter(|r| r.m == 2 && r.value == -1).count();
    assert_eq!(negative, 4);
    for r in &report.indicators {
        assert!(r.paths.contains_key("zform") && r.paths.contains_key("charform"));
        assert!(r.paths.contains_key("closed_form"));
    }
}

#[test]
fn group_indicator_rows() {
    let out = fsind(&["--l", "3", "--k", "4", "indicators", "--target", "group", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.indicators.len(), 16 * 16);
    for r in report.indicators.iter().filter(|r| r.m == 2) {
        assert_eq!(r.value, 1);
    }
    assert!(report.indicators.iter().all(|r| r.agree && r.value >= 0));
}

#[test]
fn json_round_trip_matches_in_memory() {
    let mut config = RunConfig::new(3, 4);
    config.max_m = Some(8);
    let report = cmd_indicators(&config, Target::Double).unwrap();
    let out = fsind(&["--l", "3", "--k", "4", "--max-m", "8", "indicators", "--format", "json"]);
    let parsed: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed, report);
    assert_eq!(parsed.indicators.len(), report.indicators.len());
    assert_eq!(parsed.disagreements(), report.disagreements());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--l", "3", "--k", "8", "characters", "--format", "json"][..],
        &["--l", "3", "--k", "4", "indicators", "--format", "csv"][..],
        &["--l", "3", "--k", "4", "verify", "--format", "json", "--seed", "7"][..],
    ] {
        let a = fsind(args);
        let b = fsind(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn csv_has_header() {
    let out = fsind(&["--l", "3", "--k", "4", "--max-m", "2", "indicators", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("target,class_rep,eta_id,m,value,bruteforce,closed_form,zform,charform,central,agree")
    );
    assert_eq!(lines.count(), 232 * 2);
    let out = fsind(&["--l", "3", "--k", "4", "structure", "--format", "csv"]);
    assert!(stdout(&out).starts_with("index,representative,size,type,centralizer_order,centralizer_generators\n"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("fsind-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("classes.json");
    let out = fsind(&["--l", "3", "--k", "4", "structure", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.classes.len(), 16);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_passes_on_untampered_groups() {
    for (l, k) in [("3", "4"), ("4", "4")] {
        let out = fsind(&["--l", l, "--k", k, "verify"]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).contains("all checks passed"));
    }
}

#[test]
fn verify_fails_with_injected_fault() {
    let out = fsind(&["--l", "3", "--k", "4", "verify", "--inject-fault", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let checks = v["checks"].as_array().unwrap();
    let class_count = checks.iter().find(|c| c["name"] == "class-count").unwrap();
    assert_eq!(class_count["status"], "fail");
    assert!(v["first_failure"].is_string());
}
