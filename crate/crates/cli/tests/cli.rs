use std::path::{Path, PathBuf};
use std::process::Command;

use tvk_cli::{closed_form, shipped_files};
use tvk_scalars::{int, zeta, Cyclotomic};

fn data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn tvk(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tvk")).args(args).env("TVK_DATA_DIR", data()).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap())
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut a = args.to_vec();
    a.push("--json");
    let (out, err, code) = tvk(&a);
    let text = if out.is_empty() { err } else { out };
    (serde_json::from_str(&text).unwrap(), code)
}

fn scratch(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("tvk-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn result(v: &serde_json::Value, i: usize) -> (&str, &str) {
    let r = &v["results"][i];
    (r["exact"].as_str().unwrap(), r["closed_form"].as_str().unwrap_or(""))
}

#[test]
fn shipped_data_matches_the_builtins() {
    for (name, text) in shipped_files() {
        let on_disk = std::fs::read_to_string(data().join(&name)).unwrap_or_default();
        assert_eq!(on_disk, text, "data/{name} is stale; regenerate with `tvk export data`");
    }
}

#[test]
fn validate_shipped_categories() {
    for cat in ["fibonacci.cat", "ising.cat", "vecZ2.cat", "vecZ3.cat"] {
        let (out, _, code) = tvk(&["validate", cat]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("[ok  ] Biedenharn-Elliott"));
        assert!(out.contains("[ok  ] orthonormality"));
    }
}

#[test]
fn validate_modular_files() {
    for m in ["toric.mod", "doubleZ3.mod", "fibonacci.mod", "ising.mod"] {
        let (v, code) = json(&["validate", "vecZ2.cat", m]);
        assert_eq!(code, 0, "{m}: {v}");
        let checks = v["checks"].as_array().unwrap();
        assert!(checks.iter().any(|c| c["name"] == "modular: braid relations" && c["pass"] == true));
    }
}

#[test]
fn corrupted_sixj_names_the_identity_and_tuple() {
    let text = std::fs::read_to_string(data().join("fibonacci.cat")).unwrap();
    let bad = text.replace("sixj tau tau tau tau tau tau [rat[-1]]", "sixj tau tau tau tau tau tau [rat[0]]");
    assert_ne!(bad, text);
    let dir = scratch("corrupt");
    let path = dir.join("bad.cat");
    std::fs::write(&path, bad).unwrap();
    let (out, _, code) = tvk(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("[FAIL] Biedenharn-Elliott"), "{out}");
    assert!(out.contains("(tau, tau"), "{out}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn invalid_category_is_a_failed_check() {
    let text = std::fs::read_to_string(data().join("vecZ2.cat")).unwrap();
    let bad = text.replace("qdim 1 rat[1]", "qdim 1 rat[2]");
    assert_ne!(bad, text);
    let dir = scratch("qdim");
    let path = dir.join("bad.cat");
    std::fs::write(&path, bad).unwrap();
    let (v, code) = json(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["checks"][0]["name"], "load");
    assert!(v["checks"][0]["detail"].as_str().unwrap().contains('1'));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn tv_examples() {
    let (v, code) = json(&["tv", "fibonacci.cat", "--builtin", "s3"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, 0).1, "(5-√5)/10");
    let (v, _) = json(&["tv", "vecZ2.cat", "lens51.tri"]);
    assert_eq!(result(&v, 0).1, "1/2");
    let (v, _) = json(&["tv", "vecZ3.cat", "--builtin", "s1xs2"]);
    assert_eq!(result(&v, 0).1, "1");
}

#[test]
fn exact_values_round_trip() {
    let (v, _) = json(&["tv", "fibonacci.cat", "lens21.tri"]);
    let x: Cyclotomic = result(&v, 0).0.parse().unwrap();
    let want = (int(5) + zeta(5, 1) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3)) * Cyclotomic::from_ratio(1, 10);
    assert_eq!(x, want);
}

#[test]
fn rt_dim_and_verify() {
    let (v, code) = json(&["rt", "toric.mod", "unknot_framing0.srg"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, 0).1, "1");
    let (v, code) = json(&["dim", "fibonacci.cat", "--genus", "1"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, 0).1, "4");
    let (v, code) = json(&["verify", "main_theorem.manifest"]);
    assert_eq!(code, 0, "{v}");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 13);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_fails_on_an_inequality() {
    let dir = scratch("verify");
    let path = dir.join("wrong.manifest");
    std::fs::write(&path, "tvk-manifest 1\npair builtin:vecZ2 double:2\ncase builtin:lens(2,1) unknot:3\n").unwrap();
    let (out, _, code) = tvk(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("[FAIL]"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(tvk(&["tv", "missing.cat", "s3.tri"]).2, 2);
    assert_eq!(tvk(&["tv", "fibonacci.cat"]).2, 2);
    assert_eq!(tvk(&["tv", "fibonacci.cat", "--builtin", "lens(4,2)"]).2, 2);
    assert_eq!(tvk(&["rt", "fibonacci.mod", "empty.srg"]).2, 2);
    assert_eq!(tvk(&["frobnicate"]).2, 2);
    assert_eq!(tvk(&["dim"]).2, 2);
    let (v, code) = json(&["rt", "toric.mod", "nope.srg"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert!(v["error"].as_str().unwrap().contains("nope.srg"));
}

#[test]
fn report_schema() {
    let (v, _) = json(&["tv", "vecZ2.cat", "s3.tri", "--digits", "5"]);
    for key in ["command", "inputs", "results", "checks", "status", "metadata"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(v["metadata"]["digits"], 5);
    assert_eq!(v["results"][0]["approx"], "0.50000");
    assert_eq!(v["command"][0], "tv");
}

#[test]
fn runs_are_deterministic() {
    let strip = |mut v: serde_json::Value| {
        v["metadata"]["elapsed_ms"] = 0.into();
        v
    };
    let a = strip(json(&["verify", "main_theorem.manifest"]).0);
    let b = strip(json(&["verify", "main_theorem.manifest"]).0);
    assert_eq!(a, b);
    let one = json(&["tv", "fibonacci.cat", "lens31.tri"]).0;
    let four = json(&["tv", "fibonacci.cat", "lens31.tri", "--threads", "4"]).0;
    assert_eq!(one["results"], four["results"]);
}

#[test]
fn data_dir_comes_from_the_environment() {
    let dir = scratch("env");
    std::fs::write(dir.join("mine.srg"), "tvk-surgery 1\nname lens(2,1)\nstrands 1\nword\nframing 2\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_tvk"))
        .args(["rt", "double:2", "mine.srg"])
        .env("TVK_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("rt = 1\n"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn export_writes_every_file() {
    let dir = scratch("export");
    let (_, _, code) = tvk(&["export", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), shipped_files().len());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn closed_forms() {
    let r2 = zeta(8, 1) + zeta(8, 7);
    assert_eq!(closed_form(&int(-3)).unwrap(), "-3");
    assert_eq!(closed_form(&Cyclotomic::from_ratio(2, 6)).unwrap(), "1/3");
    assert_eq!(closed_form(&(r2.clone() * Cyclotomic::from_ratio(1, 2))).unwrap(), "√2/2");
    assert_eq!(closed_form(&(Cyclotomic::from_ratio(1, 2) - r2 * Cyclotomic::from_ratio(1, 4))).unwrap(), "(2-√2)/4");
    assert_eq!(closed_form(&zeta(4, 1)).unwrap(), "i");
    assert_eq!(closed_form(&(zeta(3, 1) - zeta(3, 2))).unwrap(), "i√3");
    assert_eq!(closed_form(&(int(1) - zeta(5, 2) - zeta(5, 3))).unwrap(), "(3+√5)/2");
    assert!(closed_form(&zeta(5, 1)).is_none());
    assert!(closed_form(&zeta(8, 1)).is_none());
}
