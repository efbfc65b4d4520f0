use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn svcurves(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svcurves"))
        .args(args)
        .env_remove("SVCURVES_CACHE")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn semigroup_json() {
    let v = json_of(&svcurves(&["semigroup", "8", "10", "12", "13", "--json"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["genus"], 14);
    assert_eq!(v["frobenius"], 27);
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["gaps"].as_array().unwrap().len(), 14);
}

#[test]
fn count_uses_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = json_of(&svcurves(&["count", "suzuki:1", "-m", "2", "--json", "--cache", cache]));
    assert_eq!(first["N"], 65);
    assert_eq!(first["cached"], false);
    let second = json_of(&svcurves(&["count", "suzuki:1", "-m", "2", "--json", "--cache", cache, "--validate"]));
    assert_eq!(second["N"], 65);
    assert_eq!(second["cached"], true);

    let env_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_svcurves"))
        .args(["count", "hermitian:3", "--json"])
        .env("SVCURVES_CACHE", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["N"], 28);
    assert_eq!(fs::read_dir(env_dir.path()).unwrap().count(), 1);
}

#[test]
fn custom_curve_from_toml() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.toml");
    fs::write(&path, "name = \"y2y-x5\"\np = 2\nn = 1\nmonomials = [[0, 2, 1], [0, 1, 1], [5, 0, 1]]\n").unwrap();
    let v = json_of(&svcurves(&["count", path.to_str().unwrap(), "--json"]));
    assert_eq!(v["N"], 3);
    let fit = json_of(&svcurves(&["zeta", "fit", path.to_str().unwrap(), "--check-m", "4", "--json"]));
    assert_eq!(fit["fit"]["g"], 2);
    assert!(fit["predictions"].as_array().unwrap().iter().all(|r| r["match"] == true));
}

#[test]
fn zeta_predictions_match() {
    let v = json_of(&svcurves(&["zeta", "suzuki:1", "--max-m", "4", "--json"]));
    let rows = v["predictions"].as_array().unwrap();
    let enumerated: Vec<u64> = rows.iter().map(|r| r["N_enum"].as_u64().unwrap()).collect();
    assert_eq!(enumerated, [65, 65, 65, 5889]);
    assert!(rows.iter().all(|r| r["match"] == true));
}

#[test]
fn orders_report() {
    let v = json_of(&svcurves(&["orders", "suzuki:1", "--json"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["eps"], serde_json::json!([0, 1, 2, 4, 8]));
    assert_eq!(v["nu"], serde_json::json!([0, 2, 4, 8]));
    assert_eq!(v["deg_r"], 455);
    assert_eq!(v["deg_s"], 520);
}

#[test]
fn ovoid_report() {
    let v = json_of(&svcurves(&["ovoid", "--s", "1", "--json"]));
    assert_eq!(v["size"], 65);
    assert_eq!(v["equal"], true);
    assert_eq!(v["injective"], true);
    assert_eq!(v["collinearity_checked"], false);
}

#[test]
fn verify_writes_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    for _ in 0..2 {
        let out = svcurves(&["verify", "suzuki", "1", "--out", out_dir]);
        assert!(out.status.success());
        assert!(String::from_utf8_lossy(&out.stdout).contains("suzuki 1: "));
    }
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1, "same content, same file");
    let v: Value = serde_json::from_str(&fs::read_to_string(&files[0]).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], v["total"]);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| !c["anchor"].as_str().unwrap().is_empty()));
}

#[test]
fn verify_json_and_exit_codes() {
    let v = json_of(&svcurves(&["verify", "quotient", "5", "2", "--json"]));
    assert_eq!(v["summary"], format!("{}/{}", v["total"], v["total"]));

    let capped = svcurves(&["verify", "hermitian", "7"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("--unsafe-cap"));

    let unknown = svcurves(&["verify", "klein", "7"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn seed_is_reserved() {
    let out = svcurves(&["semigroup", "3", "5", "--seed", "7"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ignored"));
}
