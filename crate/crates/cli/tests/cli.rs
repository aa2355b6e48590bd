use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use newton_atlas::ppm::parse_ppm;
use newton_atlas::spec::parse_factors;
use newton_atlas_core::Cx;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_newton-atlas"));
    c.env_remove("NEWTON_ATLAS_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("report.schema.json");
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn check_schema(v: &Value) {
    let errs: Vec<String> = schema().iter_errors(v).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errs.is_empty(), "{errs:#?}\n{v:#}");
}

/// Parses stdout, validates it and checks exit code 0.
fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    check_schema(&v);
    v
}

fn fails(args: &[&str], code: i32) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

fn cx(v: &Value) -> Cx {
    Cx::new(v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

fn sorted_re(mut xs: Vec<f64>) -> Vec<f64> {
    xs.sort_by(f64::total_cmp);
    xs
}

const THREE_QUARTERS: [&str; 4] = ["--roots", "0,0:4", "--poles", "0.5,0:2;-0.5,0:2"];
const FIVE_QUARTERS: [&str; 4] = ["--roots", "0,0.5:2;0,-0.5:2", "--poles", "0,0:4"];

fn with<'a>(cmd: &'a str, spec: &[&'a str], rest: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(spec);
    v.extend_from_slice(rest);
    v
}

#[test]
fn analyze_three_quarters() {
    let v = ok(&with("analyze", &THREE_QUARTERS, &[]));
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["degree"], 3);
    assert_eq!(v["rfpt_pass"], true);
    let fp = v["fixed_points"].as_array().unwrap();
    let mults = sorted_re(fp.iter().map(|p| cx(&p["multiplier"]).re).collect());
    assert_eq!(mults, [0.0, 0.75, 1.5, 1.5]);
    assert_eq!(fp.iter().filter(|p| p["location"] == "infinity").count(), 1);
    assert_eq!(v["julia_class"]["topology"], "JordanCurve");
    assert_eq!(v["cubic_report"]["case"], "IIBi");
    assert!(v["quad_class"].is_null());
    let text = String::from_utf8(run(&with("analyze", &THREE_QUARTERS, &[])).stdout).unwrap();
    let pos = |k: &str| text.find(&format!("\"{k}\":")).unwrap();
    assert!(pos("command") < pos("input") && pos("input") < pos("degree") && pos("degree") < pos("julia_class"));
}

#[test]
fn analyze_double_root() {
    let v = ok(&["analyze", "--roots", "0,0:2;1,0:1"]);
    assert_eq!(v["degree"], 2);
    let idx = sorted_re(v["fixed_points"].as_array().unwrap().iter().map(|p| cx(&p["index"]).re).collect());
    assert_eq!(idx, [-2.0, 1.0, 2.0]);
    assert_eq!(v["quad_class"]["class"], "N1");
}

#[test]
fn analyze_raw_map() {
    let v = ok(&["analyze", "--num", "0;0.75;0;1"]);
    assert_eq!(v["input"]["kind"], "raw");
    assert_eq!(v["degree"], 3);
    assert_eq!(v["rfpt_pass"], true);
    assert!(v["julia_class"].is_null());
    let err = fails(&["analyze", "--num", "0;0.5", "--den", "1"], 2);
    assert!(err.contains("degree 1"), "{err}");
    fails(&["analyze", "--num", "0,0.5", "--den", "1"], 2);
}

#[test]
fn classify_examples() {
    let v = ok(&with("classify", &THREE_QUARTERS, &[]));
    assert_eq!(v["case"], "IIBi");
    assert_eq!(v["conjugate_to_poly"], true);
    assert!((cx(&v["normal_form"]["a"]) - Cx::new(0.75, 0.0)).norm() < 1e-10);
    assert!(cx(&v["normal_form"]["b"]).norm() < 1e-10);
    assert_eq!(v["julia"], "JordanCurve");

    let v = ok(&["classify", "--roots", "0,0:1", "--poles", "1,0:2"]);
    assert_eq!((v["class"].as_str(), v["d1"].as_u64(), v["d2"].as_u64()), (Some("N1"), Some(1), Some(2)));
    assert_eq!(v["julia"], "JordanCurve");

    let v = ok(&["classify", "--poles", "0,0:1;1,0:1"]);
    assert_eq!(v["class"], "N2");
    assert_eq!(v["julia"], "TotallyDisconnected");

    let v = ok(&with("classify", &FIVE_QUARTERS, &[]));
    assert_eq!(v["julia"], "SelfIntersectingClosedCurve");
    assert_eq!(v["indices"], serde_json::json!([2, 2, -4]));

    // raw input goes through recognition first
    let v = ok(&["classify", "--num", "0;0.75;0;1"]);
    assert_eq!(v["case"], "IIBi");
    let err = fails(&["classify", "--num", "0;0;0;1"], 2);
    assert!(err.contains("not a Newton map"));

    fails(&["classify", "--roots", "0,0:1;1,0:1;0,1:1;2,1:1"], 4);
}

#[test]
fn characterize_examples() {
    let v = ok(&["characterize", "--num", "0;0.75;0;1"]);
    assert_eq!(v["is_newton_map"], true);
    let roots = parse_factors("r", v["generator"]["roots"].as_str().unwrap()).unwrap();
    let poles = parse_factors("p", v["generator"]["poles"].as_str().unwrap()).unwrap();
    assert_eq!(roots.len(), 1);
    assert!(roots[0].0.norm() < 1e-9 && roots[0].1 == 4);
    let mut pr: Vec<(f64, u32)> = poles.iter().map(|&(z, k)| (z.re, k)).collect();
    pr.sort_by(|a, b| a.0.total_cmp(&b.0));
    assert!((pr[0].0 + 0.5).abs() < 1e-9 && (pr[1].0 - 0.5).abs() < 1e-9);
    assert_eq!((pr[0].1, pr[1].1), (2, 2));

    let v = ok(&["characterize", "--num", "0;0;0;1"]);
    assert_eq!(v["is_newton_map"], false);
    assert_eq!(v["reason"], "multiplier 3 not of form p/q with |p-q|=1");
    let v = ok(&["characterize", "--num", "-1;0;1"]);
    assert_eq!(v["is_newton_map"], false);
    assert!(v["reason"].as_str().unwrap().starts_with("multiplier "));

    fails(&with("characterize", &THREE_QUARTERS, &[]), 2);
}

#[test]
fn validation_and_exit_codes() {
    let err = fails(&["analyze", "--roots", "0,0:4;0.5,x:2"], 2);
    assert_eq!(err.trim(), "error: --roots:1:11: invalid number `x`");
    let err = fails(&["analyze", "--roots", "0,0:4", "--poles", "1,0:0"], 2);
    assert!(err.contains("--poles:1:5"), "{err}");
    fails(&["analyze"], 2);
    fails(&["analyze", "--roots", "0,0:1", "--num", "1"], 2);
    fails(&["analyze", "--roots", "0,0:1;0,0:2"], 2);
    // Newton map of z is the constant 0
    fails(&["analyze", "--roots", "0,0:1"], 3);
    let dir = tempdir("io");
    let out = dir.join("missing").join("x.ppm");
    fails(&with("render", &THREE_QUARTERS, &["--size", "4x4", "--out", out.to_str().unwrap()]), 5);
    fails(&with("render", &THREE_QUARTERS, &["--size", "4x0", "--out", "x.ppm"]), 2);
    fails(&with("render", &THREE_QUARTERS, &["--viewport", "0,0,4", "--out", "x.ppm"]), 2);
    let o = bin()
        .args(with("render", &THREE_QUARTERS, &["--size", "4x4", "--out", dir.join("t.ppm").to_str().unwrap()]))
        .env("NEWTON_ATLAS_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

fn tempdir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("newton-atlas-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn render_is_deterministic_and_documented() {
    let dir = tempdir("render");
    let mut images = Vec::new();
    for threads in [None, Some("1"), Some("3")] {
        let out = dir.join(format!("a{}.ppm", threads.unwrap_or("d")));
        let mut c = bin();
        c.args(with("render", &THREE_QUARTERS, &["--size", "64x48", "--out", out.to_str().unwrap()]));
        if let Some(t) = threads {
            c.env("NEWTON_ATLAS_THREADS", t);
        }
        let o = c.output().unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let stdout: Value = serde_json::from_slice(&o.stdout).unwrap();
        let side: Value = serde_json::from_slice(&std::fs::read(dir.join(format!("{}.json", out.file_name().unwrap().to_str().unwrap()))).unwrap()).unwrap();
        check_schema(&side);
        assert_eq!(stdout, side);
        assert_eq!(side["attractors"][0]["color"], serde_json::json!([0, 170, 0]));
        assert_eq!(side["attractors"][1]["location"], "infinity");
        assert_eq!(side["attractors"][1]["color"], serde_json::json!([0, 0, 0]));
        images.push(std::fs::read(&out).unwrap());
    }
    assert!(images.windows(2).all(|w| w[0] == w[1]));
    let (w, h, px) = parse_ppm(&images[0]).unwrap();
    assert_eq!((w, h), (64, 48));
    assert!(images[0].starts_with(b"P6\n64 48\n255\n"));
    assert!(px.chunks(3).any(|c| c == [0, 170, 0]) && px.chunks(3).any(|c| c == [0, 0, 0]));
}

#[test]
fn table_templates_analyze_cleanly() {
    let templates: [(&str, &str); 9] = [
        ("0,0:7", "1,0:2;0.3,1:2;-1,0.5:2"),
        ("0,0:1;1,0:3", "0.5,1:1;0.8,-0.6:2"),
        ("0,0:1;1,0:1;-0.7,0.4:2", "2,1:3"),
        ("", "0,0:1;1,0:2;0.5,1:1"),
        ("0,0:3", "1,0:1;-0.5,0:2"),
        ("0,0:1", "1,0:2;-1,0:2"),
        ("0,0:1;1,0:2", "0.6666666666666666,0:3"),
        ("0,0:1;1,0:1", "3,0:3"),
        ("0,0:1;1,0:1;-1,0:1", ""),
    ];
    for (roots, poles) in templates {
        let mut args = vec!["analyze"];
        if !roots.is_empty() {
            args.extend(["--roots", roots]);
        }
        if !poles.is_empty() {
            args.extend(["--poles", poles]);
        }
        let v = ok(&args);
        assert_eq!(v["degree"], 3, "{roots} / {poles}");
        assert_eq!(v["rfpt_pass"], true);
    }
}

#[test]
fn identical_argv_gives_identical_stdout() {
    for args in [with("analyze", &FIVE_QUARTERS, &[]), with("classify", &FIVE_QUARTERS, &[])] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let v = ok(&with("analyze", &THREE_QUARTERS, &[]));
    let s = schema();
    let mut bad = v.clone();
    bad["fixed_points"][0]["class"] = "sticky".into();
    assert!(!s.is_valid(&bad));
    let mut bad = v.clone();
    bad.as_object_mut().unwrap().remove("rfpt_pass");
    assert!(!s.is_valid(&bad));
    let mut bad = ok(&["classify", "--poles", "0,0:1;1,0:1"]);
    bad["d1"] = 1.into();
    assert!(!s.is_valid(&bad));
    let mut bad = v;
    bad["command"] = "classify".into();
    assert!(!s.is_valid(&bad));
}
