use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn frustum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frustum")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(path: &Path, index: usize) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(index).unwrap().to_string())
        .collect()
}

#[test]
fn generate_cone_summary() {
    let out = frustum(&["generate", "--g", "affine:1,0", "--horizon", "4"]);
    assert!(out.status.success());
    // e_t = e_{t-1} + n_{t-1} binom(t+1, 2): 0, 1, 7, 43, 283
    assert_eq!(stdout(&out), "n=120 e=283\n");
}

#[test]
fn generate_writes_exports() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("k5");
    let out = frustum(&["generate", "--n", "5", "--g", "const:1", "--horizon", "0", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let edges = fs::read_to_string(dir.join("edges.txt")).unwrap();
    assert_eq!(edges.lines().count(), 10);
    assert_eq!(fs::read_to_string(dir.join("vertices.txt")).unwrap().lines().count(), 5);
    assert!(fs::read_to_string(dir.join("caps.txt")).unwrap().is_empty());
}

#[test]
fn model_file_and_overrides() {
    let tmp = tempfile::tempdir().unwrap();
    let model = tmp.path().join("cyl.txt");
    fs::write(&model, "n = 1\nf.kind = affine\nf.params = 1 0\ng.kind = affine\ng.params = 1 0\nhorizon = 4\n").unwrap();
    let out = frustum(&["analyze", "--model", model.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let orders: Vec<&str> = text.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    // K1, K2, K4, then four triangles capped by K6s, then all 61 K4s capped
    assert_eq!(orders, ["n=1", "n=2", "n=4", "n=16", "n=260"]);
    let short = frustum(&["generate", "--model", model.to_str().unwrap(), "--horizon", "2"]);
    assert_eq!(stdout(&short), "n=4 e=6\n");
}

#[test]
fn analyze_series() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = |d: &str| tmp.path().join(d);
    let run = |args: &[&str], d: &str| {
        let mut all = args.to_vec();
        let out_dir = dir(d);
        all.extend(["--out", out_dir.to_str().unwrap()]);
        assert!(frustum(&all).status.success());
    };
    run(&["analyze", "--g", "affine:1,0", "--horizon", "3", "--distances"], "diam");
    assert_eq!(column(&dir("diam").join("series.tsv"), 2), ["0", "1", "3", "5"]);

    run(&["analyze", "--g", "const:2", "--horizon", "3"], "dense");
    let density: Vec<f64> = column(&dir("dense").join("series.tsv"), 1).iter().map(|x| x.parse().unwrap()).collect();
    assert!(density.windows(2).all(|w| w[0] < w[1]), "{density:?}");

    run(&["analyze", "--n", "2", "--f", "const:2", "--g", "const:2", "--horizon", "3"], "cyl");
    let density: Vec<f64> = column(&dir("cyl").join("series.tsv"), 1).iter().map(|x| x.parse().unwrap()).collect();
    assert!(density.windows(2).all(|w| w[0] < w[1]) && density.iter().all(|&d| d < 2.5), "{density:?}");

    run(&["analyze", "--g", "const:2", "--horizon", "2", "--spectral"], "spec");
    assert!(dir("spec").join("eigenvalues_t2.txt").exists());
    assert!(!dir("spec").join("eigenvalues_t0.txt").exists());
    let lambda = column(&dir("spec").join("series.tsv"), 4);
    assert_eq!(lambda[0], "-");
    assert!(lambda[2].parse::<f64>().unwrap() >= 0.5);
}

#[test]
fn round_trip_reproduces_metrics() {
    let tmp = tempfile::tempdir().unwrap();
    let p = |d: &str| tmp.path().join(d).to_string_lossy().into_owned();
    let model = ["--n", "2", "--f", "table:1,2,2", "--g", "table:1,1,2", "--horizon", "3"];
    assert!(frustum(&[&["generate"], &model[..], &["--out", &p("gen")]].concat()).status.success());
    let direct = frustum(&[&["analyze", "--distances"], &model[..]].concat());
    let imported = frustum(&["analyze", "--distances", "--import", &p("gen")]);
    assert!(direct.status.success() && imported.status.success());
    assert_eq!(direct.stdout, imported.stdout);
    let truncated = frustum(&["analyze", "--import", &p("gen"), "--horizon", "1"]);
    assert_eq!(stdout(&truncated).lines().count(), 2);
}

#[test]
fn validate_default_suite() {
    let tmp = tempfile::tempdir().unwrap();
    let out = frustum(&["validate", "--out", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("wiener arbitration: recommended=recurrence"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("validation.json")).unwrap()).unwrap();
    let checks = json["checks"].as_array().unwrap();
    let w = checks
        .iter()
        .find(|c| c["run"] == "cone g=(1,1)" && c["quantity"] == "wiener-recurrence" && c["t"] == 2)
        .unwrap();
    assert_eq!((w["expected"].as_str(), w["measured"].as_str(), w["verdict"].as_str()), (Some("10"), Some("10"), Some("match")));
    assert!(fs::read_to_string(tmp.path().join("validation.txt")).unwrap().contains("# result: PASS"));
}

#[test]
fn validate_single_model_and_fault() {
    let out = frustum(&["validate", "--g", "const:2", "--horizon", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let bad = frustum(&["validate", "--g", "const:2", "--horizon", "3", "--inject-fault", "cone-order"]);
    assert_eq!(bad.status.code(), Some(1));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert_eq!(err.matches("mismatch: model cone-order").count(), 4);
}

#[test]
fn sweep_rows() {
    let out = frustum(&[
        "--workers", "3", "sweep", "--f", "const:1", "--g", "const:1", "--g", "const:2", "--g", "affine:1,0", "--horizon", "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 3);
    let mins: Vec<&str> = rows.iter().map(|r| r[9]).collect();
    assert_eq!(mins, ["1/1", "2/1", "2/1"]);
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), ["0", "1", "2"]);

    let serial = frustum(&[
        "--workers", "1", "sweep", "--f", "const:1", "--g", "const:1", "--g", "const:2", "--g", "affine:1,0", "--horizon", "4",
    ]);
    assert_eq!(serial.stdout, out.stdout);

    let cyl = frustum(&["sweep", "--n", "2", "--f", "const:2", "--g", "const:2", "--horizon", "3"]);
    let row = stdout(&cyl).lines().nth(1).unwrap().to_string();
    assert!(row.contains("\t88\t216\t27/11\t"), "{row}");
}

#[test]
fn sweep_edge_cases() {
    let empty = frustum(&["sweep", "--horizon", "3"]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(stdout(&empty).lines().count(), 1);

    let mixed = frustum(&["sweep", "--f", "const:1", "--f", "const:3", "--g", "const:3", "--horizon", "20", "--budget", "1000"]);
    assert_eq!(mixed.status.code(), Some(0));
    let text = stdout(&mixed);
    assert!(text.lines().nth(1).unwrap().contains("err:budget"));
    assert!(text.lines().nth(2).unwrap().contains("err:invalid"));
}

#[test]
fn exit_codes() {
    assert_eq!(frustum(&["generate", "--g", "const:3", "--horizon", "20"]).status.code(), Some(3));
    assert_eq!(frustum(&["generate", "--f", "const:3", "--g", "const:1", "--horizon", "2"]).status.code(), Some(2));
    assert_eq!(frustum(&["generate", "--g", "cubic:1", "--horizon", "2"]).status.code(), Some(2));
    assert_eq!(frustum(&["generate", "--model", "/nonexistent/model.txt"]).status.code(), Some(2));
    assert_eq!(frustum(&["--workers", "0", "sweep", "--horizon", "1"]).status.code(), Some(2));
    assert_eq!(frustum(&["analyze", "--import", "/nonexistent"]).status.code(), Some(2));
}
