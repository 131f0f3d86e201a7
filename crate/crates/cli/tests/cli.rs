use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathdepth"))
        .args(args)
        .env_remove("PATHDEPTH_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON value per line")).collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn validator() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_schema(recs: &[Value]) {
    let v = validator();
    assert_eq!(recs[0]["kind"], "metadata");
    for r in recs {
        let errors: Vec<String> = v.iter_errors(r).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{r}: {errors:?}");
    }
}

#[test]
fn depth_of_short_path() {
    let o = run(&["depth", "--path", "3", "2", "--t", "1", "--format", "json"]);
    assert!(o.status.success());
    let recs = records(&o);
    assert_schema(&recs);
    assert_eq!(recs[1]["depth_quotient"], 1);
    assert_eq!(recs[1]["pd"], 2);
    assert_eq!(recs[1]["depth_ideal"], 2);
}

#[test]
fn sdepth_ships_a_certificate_the_checker_accepts() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json").display().to_string();
    let o = run(&["sdepth", "--path", "3", "2", "--mode", "quotient", "--certificate", &cert, "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let recs = records(&o);
    assert_schema(&recs);
    assert_eq!(recs[1]["value"], 1);
    assert_eq!(recs[1]["certificate"], cert.as_str());

    let o = run(&["sdepth", "--path", "3", "2", "--check-certificate", &cert, "--format", "json"]);
    assert!(o.status.success());
    let recs = records(&o);
    assert_schema(&recs);
    assert_eq!(recs[1]["accepted"], true);

    // claim one more than the certificate supports
    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    c["claimed_min_rho"] = 2.into();
    std::fs::write(&cert, c.to_string()).unwrap();
    let o = run(&["sdepth", "--path", "3", "2", "--check-certificate", &cert, "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let recs = records(&o);
    assert_schema(&recs);
    assert_eq!(recs[1]["accepted"], false);
}

#[test]
fn betti_of_principal_ideal_is_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "principal.ideal", "ring n=3\nx1*x2^2\n");
    let o = run(&["betti", "--file", &f, "--format", "json"]);
    assert!(o.status.success());
    let recs = records(&o);
    assert_schema(&recs);
    let rows: Vec<_> = recs.iter().filter(|r| r["kind"] == "betti").collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["i"], 1);
    assert_eq!(rows[0]["degree"], serde_json::json!([1, 2, 0]));
    assert_eq!(rows[0]["rank"], 1);
}

#[test]
fn file_power_matches_path_family() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p.ideal", "ring n=4\nx1*x2\n2:1 3:1\nx3*x4\n");
    let a = records(&run(&["depth", "--file", &f, "--t", "2", "--format", "json"]));
    let b = records(&run(&["depth", "--path", "4", "2", "--t", "2", "--format", "json"]));
    assert_eq!(a[1]["pd"], b[1]["pd"]);
    assert_eq!(a[1]["depth_quotient"], 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.ideal", "x1*x2\n");
    assert_eq!(run(&["depth", "--file", &bad]).status.code(), Some(2));
    assert_eq!(run(&["depth", "--path", "3", "4"]).status.code(), Some(2));
    assert_eq!(run(&["depth", "--file", "/nonexistent/ideal"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--n", "5..2"]).status.code(), Some(2));
    assert_eq!(run(&["depth"]).status.code(), Some(2));

    let unit = write(dir.path(), "unit.ideal", "ring n=2\n1\n");
    assert_eq!(run(&["depth", "--file", &unit]).status.code(), Some(5));
    let zero = write(dir.path(), "zero.ideal", "ring n=2\n");
    assert_eq!(run(&["depth", "--file", &zero]).status.code(), Some(5));

    assert_eq!(run(&["depth", "--path", "8", "1", "--t", "4"]).status.code(), Some(3));
    assert_eq!(run(&["sdepth", "--path", "6", "1", "--t", "2", "--max-poset", "100"]).status.code(), Some(3));
    assert_eq!(
        run(&["sdepth", "--path", "6", "1", "--t", "2", "--mode", "ideal", "--timeout-secs", "0"]).status.code(),
        Some(4)
    );
}

#[test]
fn lemma_checks() {
    let o = run(&["check", "colon-power", "--n", "3", "--m", "2", "--t", "2", "--format", "json"]);
    assert!(o.status.success());
    assert_schema(&records(&o));

    let o = run(&["check", "truncation", "--n", "4", "--m", "2", "--t", "2", "--k", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(x3, x1^2*x2^2)"), "{}", stdout(&o));

    let o = run(&["check", "umt", "--m", "2", "--t", "2", "--format", "json"]);
    assert!(o.status.success());
    let recs = records(&o);
    assert_schema(&recs);
    assert!(recs.iter().any(|r| r["detail"] == "1 in [1, 2]"));

    // the single-block colon identity fails; both sides are printed
    let o = run(&["check", "colon-w", "--n", "5", "--m", "2", "--t", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let recs = records(&o);
    assert_schema(&recs);
    let fail = recs.iter().find(|r| r["status"] == "fail").unwrap();
    assert!(fail["detail"].as_str().unwrap().contains("x4*x5"));

    assert_eq!(run(&["check", "no-such-lemma", "--m", "2", "--t", "2"]).status.code(), Some(2));
    assert_eq!(run(&["check", "ladder", "--m", "2", "--t", "2"]).status.code(), Some(2));
}

#[test]
fn sweep_rows_are_ordered_and_validated() {
    let o = run(&["sweep", "--n", "2..4", "--m", "1..3", "--t", "1..2", "--sdepth", "--format", "json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let recs = records(&o);
    assert_schema(&recs);
    let keys: Vec<(u64, u64, u64)> = recs[1..]
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["m"].as_u64().unwrap(), r["t"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    // m <= n only
    assert_eq!(keys.len(), 2 * (2 + 3 + 3));
}

#[test]
fn sweep_formats_agree() {
    let args = ["sweep", "--n", "3", "--m", "2", "--t", "1..2"];
    let md = stdout(&run(&[&args[..], &["--format", "markdown"]].concat()));
    let csv = stdout(&run(&[&args[..], &["--format", "csv"]].concat()));
    assert_eq!(md.lines().filter(|l| l.starts_with("| 3 |")).count(), 2);
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.lines().nth(1).unwrap().starts_with("3,2,1,"));
}

fn strip_runtime(recs: Vec<Value>) -> Vec<Value> {
    recs.into_iter()
        .map(|mut r| {
            if let Some(o) = r.as_object_mut() {
                o.remove("runtime_ms");
            }
            r
        })
        .collect()
}

fn cached_sweep(cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathdepth"))
        .args(["sweep", "--n", "3..5", "--m", "2..3", "--t", "1..2", "--sdepth", "--sdepth-ideal", "--format", "json"])
        .env("PATHDEPTH_CACHE", cache)
        .output()
        .unwrap()
}

#[test]
fn cold_and_warm_cache_reports_match() {
    let dir = tempfile::tempdir().unwrap();
    // m = n cells fail the ideal upper bound, so the exit code is 1 each time
    let cold = cached_sweep(dir.path());
    assert_eq!(cold.status.code(), Some(1));
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(entries > 0, "cache was not populated");
    let warm = cached_sweep(dir.path());
    assert_eq!(warm.status.code(), Some(1));
    assert_eq!(strip_runtime(records(&cold)), strip_runtime(records(&warm)));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), entries);

    // corrupt every entry; results are recomputed, never trusted
    for e in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(e.unwrap().path(), b"{\"key\":\"junk\",\"value\":7}").unwrap();
    }
    let again = cached_sweep(dir.path());
    assert_eq!(strip_runtime(records(&cold)), strip_runtime(records(&again)));
}

#[test]
fn paranoid_warm_run_matches() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().display().to_string();
    let args = ["sdepth", "--path", "5", "2", "--t", "2", "--format", "json", "--cache-dir", &cache];
    let cold = run(&args);
    let warm = run(&[&args[..], &["--paranoid"]].concat());
    assert!(warm.status.success());
    assert_eq!(stdout(&cold), stdout(&warm));
}

#[test]
fn stefan_disagreement_does_not_fail_the_run() {
    let o = run(&["explore-stefan", "--n", "2..4", "--t", "1..2", "--format", "json"]);
    assert!(o.status.success());
    let recs = records(&o);
    assert_schema(&recs);
    let row = |n: u64, t: u64| recs.iter().find(|r| r["n"] == n && r["t"] == t).unwrap().clone();
    assert_eq!(row(3, 1)["agree"], true);
    assert_eq!(row(4, 1)["computed"], 2);
    assert_eq!(row(2, 1)["formula"], 1);
    assert_eq!(row(3, 2)["agree"], false);
}
