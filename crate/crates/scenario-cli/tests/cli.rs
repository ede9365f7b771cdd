use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sim::TICKLOG_HEADER;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fearbrake"));
    c.env_remove("FEARBRAKE_RULEBASE_DIR");
    c
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../../scenarios/{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn eval_prints_four_decimals_and_band() {
    let o = run(&["eval", "undesirability", "0.1", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0.2500 Low\n");
    assert_eq!(stdout(&run(&["eval", "likelihood", "0.5", "0.5"])), "0.5000 Low\n");
    assert!(stdout(&run(&["eval", "ig", "1.0", "1.0"])).starts_with("0.91"));
}

#[test]
fn eval_rejects_unknown_system_and_wrong_arity() {
    assert_eq!(run(&["eval", "anger", "0.1", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "ig", "0.1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "ig", "0.1", "x"]).status.code(), Some(2));
}

#[test]
fn validate_table2_exit_codes() {
    let ok = run(&["validate-table2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("14/14"));
    let tight = run(&["validate-table2", "--tolerance", "1e-6"]);
    assert_eq!(tight.status.code(), Some(4));
    assert!(stdout(&tight).contains("FAIL"));
    let printed = run(&["validate-table2", "--amended", "false"]);
    assert_eq!(printed.status.code(), Some(0));
    assert!(stdout(&printed).contains("FAIL (expected)"));
}

#[test]
fn missing_rulebase_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .env("FEARBRAKE_RULEBASE_DIR", dir.path())
        .args(["validate-table2"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rulebase_dir_is_honoured() {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../occ-fear/rulebases");
    let dir = tempfile::tempdir().unwrap();
    for f in ["undesirability.json", "likelihood.json", "ig.json", "bands.json"] {
        std::fs::copy(src.join(f), dir.path().join(f)).unwrap();
    }
    let o = bin()
        .env("FEARBRAKE_RULEBASE_DIR", dir.path())
        .args(["eval", "undesirability", "0.1", "0.5"])
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "0.2500 Low\n");
}

#[test]
fn run_writes_traces_charts_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = scenario("car-following-2");
    let o = run(&["run", "--config", p(&cfg), "--out", p(dir.path()), "--reps", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    for r in 0..3 {
        let csv = std::fs::read_to_string(dir.path().join(format!("car-following-2_run{r:03}.csv"))).unwrap();
        assert_eq!(csv.lines().next().unwrap(), TICKLOG_HEADER.join(","));
        assert_eq!(csv.lines().count(), 111);
        let svg = std::fs::read_to_string(dir.path().join(format!("car-following-2_run{r:03}.svg"))).unwrap();
        assert!(svg.contains("<svg") && svg.contains("version=\"1.1\""));
        assert_eq!(svg.matches("<polyline").count(), 2);
    }
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["runs"], 3);
    assert_eq!(summary["collisions"], 0);
}

#[test]
fn run_is_byte_identical_across_invocations() {
    let cfg = scenario("car-following-1");
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = run(&["run", "--config", p(&cfg), "--out", p(d.path()), "--seed", "42"]);
        assert_eq!(o.status.code(), Some(0));
    }
    for name in ["car-following-1_run000.csv", "car-following-1_run000.svg"] {
        assert_eq!(std::fs::read(a.path().join(name)).unwrap(), std::fs::read(b.path().join(name)).unwrap());
    }
}

#[test]
fn pedestrian_brake_appears_on_arrival_tick() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = scenario("pedestrian");
    let o = run(&["run", "--config", p(&cfg), "--out", p(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(dir.path().join("pedestrian_run000.csv")).unwrap();
    let h = rdr.headers().unwrap().clone();
    let col = |n: &str| h.iter().position(|x| x == n).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let first = rows.iter().position(|r| !r[col("pedestrian_gap")].is_empty()).unwrap();
    assert_eq!(&rows[first][col("tick")], "60");
    assert_eq!(&rows[first][col("command")], "Brake");
    assert_eq!(&rows[first + 1][col("bullet_speed")], "0.0");
}

fn edited(dir: &Path, name: &str, edit: impl FnOnce(&mut serde_json::Value)) -> PathBuf {
    let mut cfg: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(scenario("car-following-1")).unwrap()).unwrap();
    edit(&mut cfg);
    let path = dir.join(name);
    std::fs::write(&path, cfg.to_string()).unwrap();
    path
}

#[test]
fn invalid_config_lists_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = edited(dir.path(), "bad.json", |c| {
        c["separation"] = 0.2.into();
        c["bullet"]["accel"] = 0.5.into();
    });
    let o = run(&["run", "--config", p(&path), "--out", p(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("separation") && err.contains("bullet.accel"), "{err}");
}

#[test]
fn collision_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = edited(dir.path(), "crash.json", |c| {
        c["pedestrian"] = serde_json::json!({ "tick": 0, "gap": 0.0 });
    });
    let o = run(&["run", "--config", p(&path), "--out", p(dir.path())]);
    assert_eq!(o.status.code(), Some(3));
}

fn sweep_peaks(dir: &Path) -> Vec<f64> {
    csv::Reader::from_path(dir.join("sweep.csv"))
        .unwrap()
        .deserialize::<serde_json::Map<String, serde_json::Value>>()
        .map(|r| r.unwrap()["peak_intensity"].as_f64().unwrap())
        .collect()
}

#[test]
fn sweep_over_separation_lowers_peak_fear() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = scenario("car-following-1");
    let o = run(&[
        "sweep", "--config", p(&cfg), "--out", p(dir.path()),
        "--param", "separation", "--values", "5,9,13,17", "--reps", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let peaks = sweep_peaks(dir.path());
    assert_eq!(peaks.len(), 4);
    assert!(peaks.windows(2).all(|w| w[1] <= w[0]), "{peaks:?}");
}

#[test]
fn harder_braking_lowers_peak_fear() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = scenario("car-following-1");
    let o = run(&[
        "sweep", "--config", p(&cfg), "--out", p(dir.path()),
        "--param", "bullet.decel", "--values", "0.03,0.06", "--reps", "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let peaks = sweep_peaks(dir.path());
    assert!(peaks[1] < peaks[0], "{peaks:?}");
}

#[test]
fn single_value_sweep_matches_run() {
    let cfg = scenario("car-following-3");
    let s = tempfile::tempdir().unwrap();
    let r = tempfile::tempdir().unwrap();
    run(&["sweep", "--config", p(&cfg), "--out", p(s.path()), "--param", "separation", "--values", "13"]);
    run(&["run", "--config", p(&cfg), "--out", p(r.path())]);
    let id = "car-following-3_separation=13";
    let swept = std::fs::read(s.path().join(id).join(format!("{id}_run000.csv"))).unwrap();
    let direct = std::fs::read(r.path().join("car-following-3_run000.csv")).unwrap();
    assert_eq!(swept, direct);
}

#[test]
fn sweep_rejects_non_numeric_parameter() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = scenario("car-following-1");
    for param in ["id", "leader", "no.such.field"] {
        let o = run(&[
            "sweep", "--config", p(&cfg), "--out", p(dir.path()), "--param", param, "--values", "1",
        ]);
        assert_eq!(o.status.code(), Some(2), "{param}");
    }
}
