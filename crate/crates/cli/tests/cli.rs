use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn pinchlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinchlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

/// CSV rows after the manifest line and header, split on commas.
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# manifest: {"));
    lines.next().unwrap();
    lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn value(cell: &str) -> f64 {
    cell.split('[').next().unwrap().parse().unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn bounds_k1_rows_match_published_values() {
    let o = pinchlab(&["bounds", "--n-range", "3..12", "--k-range", "1..1", "--delta", "0.01"]);
    assert_eq!(code(&o), 0);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 10);
    let published = [3.64, 2.93, 2.56, 2.32, 2.17, 2.05, 1.95, 1.88, 1.83, 1.78];
    for (row, c0) in rows.iter().zip(published) {
        let lo = value(&row[2]);
        let hi = value(&row[3]);
        assert!(hi - lo <= 0.01 + 1e-12, "{row:?}");
        assert!((lo - c0).abs() <= 0.01 + 1e-9, "{row:?} vs {c0}");
        assert_eq!(row[6], "c0");
    }
    assert_eq!(rows[2][4], "9[exact]");
    assert!(rows[0][4].ends_with("[surd]"));
}

#[test]
fn bounds_k2_is_one_and_square_endpoint_is_half() {
    let o = pinchlab(&["bounds", "--n-range", "3..4", "--k-range", "2..2"]);
    assert_eq!(code(&o), 0);
    for row in csv_rows(&stdout(&o)) {
        assert!((value(&row[2]) - 1.0).abs() <= 0.01, "{row:?}");
    }
    let o = pinchlab(&["bounds", "--n-range", "9..9", "--k-range", "3..3"]);
    assert_eq!(code(&o), 0);
    let row = &csv_rows(&stdout(&o))[0];
    assert!((value(&row[2]) - 0.5).abs() <= 0.01);
    assert!((value(&row[3]) - 0.5).abs() <= 0.01);
}

#[test]
fn bounds_writes_csv_and_transcript_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let o = pinchlab(&["bounds", "--n-range", "3..5", "--k-range", "1..3", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let rows = csv_rows(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(rows.len(), 3 + 3 + 3);
    let j = read_json(&dir.path().join("b.json"));
    assert_eq!(j["verdicts"]["certified"], true);
    assert_eq!(j["manifest"]["command"], "bounds");
    let first = &j["results"][0];
    assert!(first["c0_lo"].as_str().unwrap().contains('/'));
    assert!(!first["transcript"].as_array().unwrap().is_empty());
}

#[test]
fn bounds_rejects_bad_ranges() {
    assert_eq!(code(&pinchlab(&["bounds", "--n-range", "5..3", "--k-range", "1..1"])), 2);
    assert_eq!(code(&pinchlab(&["bounds", "--n-range", "2..3", "--k-range", "1..1"])), 2);
    assert_eq!(code(&pinchlab(&["bounds", "--n-range", "3..4", "--k-range", "5..6"])), 2);
    assert_eq!(code(&pinchlab(&["bounds", "--n-range", "3..4", "--k-range", "1..1", "--delta", "-1"])), 2);
}

#[test]
fn verify_examples_pass() {
    let o = pinchlab(&["verify", "--prop", "a1", "--k-max", "12"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("PASS"));
    let o = pinchlab(&["verify", "--prop", "a3", "--n-sweep-max", "1000"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = pinchlab(&["verify", "--prop", "claim1", "--n", "3", "--k", "1", "--alpha", "1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_json_has_a_verdict_per_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("v.json");
    let o = pinchlab(&["verify", "--prop", "sandwich", "--n-max", "6", "--k-max", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let j = read_json(&out);
    let verdicts = j["verdicts"].as_object().unwrap();
    assert!(!verdicts.is_empty());
    assert!(verdicts.keys().all(|k| k.starts_with("sandwich: ")));
    assert!(verdicts.values().all(|v| v == true));
}

#[test]
fn verify_rejects_alpha_outside_range() {
    let o = pinchlab(&["verify", "--prop", "claim1", "--n", "3", "--k", "1", "--alpha", "40"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn sturm_examples() {
    let o = pinchlab(&["sturm", "--coeffs", "-1,0,1", "--interval", "0,inf"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("distinct real roots in (0, inf): 1"));

    let o = pinchlab(&["sturm", "--coeffs", "0,0,1", "--interval", "0,inf"]);
    let s = stdout(&o);
    assert!(s.contains("deflated x^2"));
    assert!(s.contains("distinct real roots in (0, inf): 0"));

    // (x - 13)(x + 2) has one root above 12 and none above 14
    let o = pinchlab(&["sturm", "--coeffs", "-26,-11,1", "--interval", "12,inf"]);
    assert!(stdout(&o).contains(": 1\n"));
    let o = pinchlab(&["sturm", "--coeffs", "-26,-11,1", "--interval", "14,inf"]);
    assert!(stdout(&o).contains(": 0\n"));
}

#[test]
fn sturm_i2_has_no_root_above_twelve() {
    let coeffs: Vec<String> = pinchlab::pinching::fixtures::i2()
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let o = pinchlab(&["sturm", "--coeffs", &coeffs.join(","), "--interval", "12,inf"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("distinct real roots in (12, inf): 0"), "{}", stdout(&o));
}

#[test]
fn sturm_rejects_malformed_input() {
    assert_eq!(code(&pinchlab(&["sturm", "--coeffs", "1,x"])), 2);
    assert_eq!(code(&pinchlab(&["sturm", "--coeffs", "1,2/0"])), 2);
    assert_eq!(code(&pinchlab(&["sturm", "--coeffs", "0,0"])), 2);
    assert_eq!(code(&pinchlab(&["sturm", "--coeffs", "1,1", "--interval", "0,5"])), 2);
    assert_eq!(code(&pinchlab(&["sturm", "--coeffs", "-1,1", "--interval", "1,inf"])), 2);
    assert_eq!(code(&pinchlab(&["bogus"])), 2);
}

#[test]
fn flow_euclidean_sphere_extinction_time() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e.csv");
    let o = pinchlab(&[
        "flow", "--space", "euclidean", "--n", "3", "--k", "1", "--alpha", "1",
        "--profile", "sphere:r0=1", "--grid", "200", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let j = read_json(&dir.path().join("e.json"));
    let t_hat = j["results"]["T_hat"].as_f64().unwrap();
    assert!((t_hat - 1.0 / 6.0).abs() <= 0.01 / 6.0, "{t_hat}");
    let rows = csv_rows(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(rows[0].len(), 11);
    assert!(rows.len() > 10);
}

#[test]
fn flow_sphere_perturbed_g_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let o = pinchlab(&[
        "flow", "--space", "sphere", "--n", "3", "--k", "3", "--alpha", "0.3334",
        "--profile", "perturbed:r0=0.6,e=0.05", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("[PASS] g_monotone"));
    let j = read_json(&dir.path().join("s.json"));
    assert_eq!(j["verdicts"]["g_monotone"], true);
    assert_eq!(j["verdicts"]["asserted"], true);
    assert!(j["results"]["decay_rate"].as_f64().unwrap() > 0.0);
}

#[test]
fn flow_strict_rejects_alpha_above_c0() {
    let o = pinchlab(&[
        "flow", "--space", "euclidean", "--n", "3", "--k", "1", "--alpha", "6",
        "--profile", "sphere:r0=1", "--strict",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn flow_rejects_bad_profiles() {
    for p in ["sphere", "cube:r0=1", "perturbed:r0=1", "sphere:r0=x", "sphere:r0=1,q=2"] {
        let o = pinchlab(&["flow", "--space", "euclidean", "--n", "3", "--k", "1", "--alpha", "1", "--profile", p]);
        assert_eq!(code(&o), 2, "{p}");
    }
    let o = pinchlab(&[
        "flow", "--space", "sphere", "--n", "3", "--k", "1", "--alpha", "1", "--profile", "sphere:r0=2",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(&conf, "n_range = 3..4\nk_range = 1..1\ndelta = 1/10\n").unwrap();
    let o = pinchlab(&["--config", conf.to_str().unwrap(), "bounds", "--delta", "1/50"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("\"delta\":\"1/50\""));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 2);
    assert!(value(&rows[0][3]) - value(&rows[0][2]) <= 0.02 + 1e-12);

    std::fs::write(&conf, "colour = blue\n").unwrap();
    assert_eq!(code(&pinchlab(&["--config", conf.to_str().unwrap(), "bounds"])), 2);
    let missing = dir.path().join("missing.conf");
    assert_eq!(code(&pinchlab(&["--config", missing.to_str().unwrap(), "bounds"])), 2);
}

#[test]
fn reproducible_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = pinchlab(&[
            "--reproducible", "flow", "--space", "euclidean", "--n", "3", "--k", "1", "--alpha", "1",
            "--profile", "perturbed:r0=1,e=0.05", "--grid", "40", "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        (
            std::fs::read(&out).unwrap(),
            std::fs::read(out.with_extension("json")).unwrap(),
        )
    };
    assert_eq!(run("a.csv"), run("b.csv"));

    let b = |name: &str| {
        let out = dir.path().join(name);
        pinchlab(&["--reproducible", "bounds", "--n-range", "3..6", "--k-range", "1..2", "--out", out.to_str().unwrap()]);
        (std::fs::read(&out).unwrap(), std::fs::read(out.with_extension("json")).unwrap())
    };
    assert_eq!(b("c.csv"), b("d.csv"));
}

#[test]
fn rerunning_from_an_embedded_manifest_reproduces_output() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.csv");
    let o = pinchlab(&[
        "--reproducible", "bounds", "--n-range", "5..7", "--k-range", "2..3", "--delta", "1/64",
        "--out", first.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let second = dir.path().join("second.csv");
    let o = pinchlab(&[
        "--reproducible", "--config", dir.path().join("first.json").to_str().unwrap(), "bounds",
        "--out", second.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());

    let manifest: Value = serde_json::from_str(
        std::fs::read_to_string(&first).unwrap().lines().next().unwrap().strip_prefix("# manifest: ").unwrap(),
    )
    .unwrap();
    let j = read_json(&dir.path().join("first.json"));
    assert_eq!(manifest, j["manifest"]);
    assert_eq!(manifest["digest"].as_str().unwrap().len(), 64);
}

#[test]
fn thread_cap_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_pinchlab"))
        .args(["bounds", "--n-range", "3..4", "--k-range", "1..1"])
        .env("PINCHLAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_pinchlab"))
        .args(["bounds", "--n-range", "3..4", "--k-range", "1..1"])
        .env("PINCHLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}
