//! End-to-end checks of the command-line binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_prefenum"))
}

#[test]
fn count_only_prints_extension_count() {
    let out = bin()
        .args(["--generate", "bidirTriangles:1", "--count-only"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");
}

#[test]
fn list_prints_sorted_label_sets() {
    let out = bin().args(["--generate", "Fn:5", "--list"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "{}");

    let out = bin()
        .args(["--generate", "twoCycles:1", "--list"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["{a0}", "{a1}"]);
}

#[test]
fn stats_emits_json_report_line() {
    let out = bin()
        .args(["--generate", "bidirTriangles:2", "--count-only", "--stats"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "9");
    let report: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(report["extension_count"], 9);
    assert_eq!(report["n"], 6);
    assert_eq!(report["r"], 1.0);
    assert_eq!(report["algorithm"], "mis");
}

#[test]
fn reads_apx_and_tgf_inputs() {
    let dir = std::env::temp_dir();
    let apx = dir.join("prefenum_cli_test.apx");
    std::fs::write(&apx, "arg(a). arg(b). att(a,b). att(b,a).\n").unwrap();
    let out = bin()
        .args(["--input", apx.to_str().unwrap(), "--count-only"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");

    let tgf = dir.join("prefenum_cli_test.tgf");
    std::fs::write(&tgf, "1 a\n2 b\n#\n1 2\n2 1\n").unwrap();
    let out = bin()
        .args(["--input", tgf.to_str().unwrap(), "--format", "tgf", "--list"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().collect::<Vec<_>>(), ["{a}", "{b}"]);
}

#[test]
fn emit_thresholds_prints_csv() {
    let out = bin().arg("--emit-thresholds").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "r,base_oriented,base_mls,base_mis");
    assert_eq!(lines.clone().count(), 101);
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[0], "0.00");
    // phi^(1+0) = phi.
    assert!((first[1].parse::<f64>().unwrap() - 1.23205).abs() < 1e-4);
    assert!((first[3].parse::<f64>().unwrap() - 3f64.powf(1.0 / 3.0)).abs() < 1e-4);
}

#[test]
fn exit_codes_distinguish_input_and_resource_errors() {
    let dir = std::env::temp_dir();
    let bad = dir.join("prefenum_cli_bad.apx");
    std::fs::write(&bad, "att(a,b).\n").unwrap();
    let out = bin()
        .args(["--input", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());

    let out = bin().args(["--generate", "nonsense:1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .args(["--generate", "twoCycles:8", "--max-n", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["--generate", "twoCycles:30", "--algorithm", "oracle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "oracle size cap should map to exit 2");
}
