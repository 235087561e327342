//! Golden-file tests for the `hpp` binary. Set `UPDATE_GOLDEN=1` to rewrite the files.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use hpp_core::analysis::f_unit;
use serde_json::Value;
use tempfile::tempdir;

fn hpp(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hpp"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = data(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {name}");
}

#[test]
fn catalog_golden() {
    let (code, out, _) = hpp(&["catalog", "p8"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ground"].as_array().unwrap().len(), 8);
    check_golden("catalog_p8.json", &out);

    let (code, out, _) = hpp(&["catalog", "u(2,4)"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["bases"].as_array().unwrap().len(), 6);
}

#[test]
fn catalog_unknown_is_usage_error() {
    let (code, out, err) = hpp(&["catalog", "nosuch"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("nosuch"));
}

#[test]
fn verify_goldens() {
    for (claim, extra) in [
        ("rayleigh-cubic", &[][..]),
        ("vdim-p8", &[]),
        ("vdim-p1", &[]),
        ("u-vector-nonfano", &[]),
        ("embed-complement", &[]),
        ("lemma-relax", &[]),
        ("amalgam-counterexample", &["--m", "2"]),
        ("qu-hpp-identity", &[]),
    ] {
        let mut args = vec!["verify", claim, "--json"];
        args.extend_from_slice(extra);
        let (code, out, err) = hpp(&args);
        assert_eq!(code, 0, "{claim}: {err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "verified", "{claim}");
        check_golden(&format!("verify_{claim}.json"), &out);
    }
}

#[test]
fn verify_payloads() {
    let (_, out, _) = hpp(&["verify", "rayleigh-cubic", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["details"]["coefficients"]["t^3"], "-1*a*b");
    assert_eq!(v["details"]["coefficients"]["t^2"], "-1*a*b - 4*b^2 + 2*a + 12*b + 16");
    assert_eq!(v["details"]["coefficients"]["t^1"], "1*a");
    let (_, out, _) = hpp(&["verify", "vdim-p8", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["details"]["dim_v"], 9);
}

#[test]
fn sampled_claims_never_report_verified() {
    for claim in ["qu-cauchy-binet", "mconvex-bijection", "mconvrest", "hypcone-sampled"] {
        let (code, out, _) = hpp(&["verify", claim, "--json", "--samples", "20", "--seed", "3"]);
        assert_eq!(code, 0, "{claim}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "sampled-pass", "{claim}");
    }
}

#[test]
fn verify_is_deterministic_and_timing_is_opt_in() {
    let args = ["verify", "qu-cauchy-binet", "--json", "--seed", "9", "--samples", "30"];
    let (_, a, _) = hpp(&args);
    let (_, b, _) = hpp(&args);
    assert_eq!(a, b);
    assert!(!a.contains("runtime_ms"));
    let (_, t, _) = hpp(&["verify", "vdim-p8", "--json", "--timing"]);
    assert!(t.contains("runtime_ms"));
}

#[test]
fn usage_errors() {
    assert_eq!(hpp(&["verify", "no-such-claim"]).0, 2);
    assert_eq!(hpp(&["verify"]).0, 2);
    assert_eq!(hpp(&["verify", "amalgam-counterexample", "--m", "0"]).0, 2);
    assert_eq!(hpp(&["frobnicate"]).0, 2);
}

#[test]
fn f11_fixture_is_current() {
    let text = f_unit().unwrap().to_text() + "\n";
    check_golden("f11.txt", &text);
}

#[test]
fn falsify_f11() {
    let path = data("f11.txt");
    let (code, out, err) = hpp(&["falsify", path.to_str().unwrap(), "--json", "--seed", "1"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "falsified");
    assert_eq!(v["details"]["reverified"], true);
    check_golden("falsify_f11.json", &out);
}

#[test]
fn falsify_linear_form_finds_nothing() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("sum.txt");
    fs::write(&path, "x + y\n").unwrap();
    let (code, out, _) = hpp(&["falsify", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "sampled-pass");
    assert_eq!(v["details"]["outcome"], "none-found");
}

#[test]
fn falsify_accepts_json() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("p.json");
    let p = hpp_core::poly::parse_poly("1*x*y + 1*x*z").unwrap();
    fs::write(&path, serde_json::to_string(&p.to_json()).unwrap()).unwrap();
    let (code, out, _) = hpp(&["falsify", path.to_str().unwrap(), "--json", "--samples", "20"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "sampled-pass");
}

#[test]
fn falsify_malformed_file() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "x ^^ + (").unwrap();
    assert_eq!(hpp(&["falsify", path.to_str().unwrap()]).0, 2);
    assert_eq!(hpp(&["falsify", dir.path().join("missing.txt").to_str().unwrap()]).0, 2);
}

#[test]
fn verify_all() {
    let (code, out, _) = hpp(&["verify", "--all", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["all_match"], true);
    let ids: Vec<&str> = v["claims"].as_array().unwrap().iter().map(|c| c["claim"].as_str().unwrap()).collect();
    let registry: Vec<&str> = hpp_cli::claims::CLAIMS.iter().map(|c| c.id).collect();
    assert_eq!(ids, registry);
}
