use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sextic(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(args)
        .current_dir(dir)
        .env_remove("CACHE_DIR")
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    sextic(dir.path(), args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("valid JSON line")).collect()
}

#[test]
fn form_eval_and_bad_input() {
    let o = run(&["form", "eval", "--m", "3", "--x", "1", "--y", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("F_3(1,2) = 397\n"), "{}", stdout(&o));

    let o = run(&["form", "eval", "--m", "q", "--x", "1", "--y", "2"]);
    assert_eq!(code(&o), 2);
    let o = run(&["form", "eval", "--m", "1"]);
    assert_eq!(code(&o), 2);
    let o = run(&["frobnicate"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn iso_examples() {
    // Equal cubic subfields, distinct sextic fields.
    let o = run(&["iso", "--a", "-1", "--b", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["equal"], false);
    assert_eq!(rec["degree"], 3);

    let o = run(&["iso", "--a", "-1", "--b", "12", "--format", "json"]);
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["equal"], false);
    assert_eq!(rec["dt2"], serde_json::json!([2, 2, 2]));

    // The Theta-image of a is always isomorphic to it.
    let o = run(&["iso", "--a", "2", "--z", "3", "--format", "json"]);
    assert_eq!(json_lines(&o)[0]["equal"], true);
}

#[test]
fn intersect_swaps_to_larger_group_first() {
    let o = run(&["intersect", "--a", "0", "--b", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["swapped"], true);
    assert_eq!(rec["relation"], "contains-2⊃1");
    assert_eq!(rec["degree"], 3);
}

#[test]
fn thue_solve_and_verify_exit_codes() {
    let o = run(&["thue", "solve", "--m", "2", "--lambda", "1", "--bound", "30", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    let sols: Vec<_> = lines.iter().filter(|r| r["kind"] == "solution").collect();
    assert_eq!(sols.len(), 6);
    assert!(sols.iter().all(|r| r["trivial"] == true));
    assert_eq!(lines.last().unwrap()["divisor"], true);

    // lambda = 397 is not a divisor of 27 * 19, so its solutions do not count against anything.
    let o = run(&["thue", "solve", "--m", "3", "--lambda", "397", "--bound", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("nontrivial"));

    let o = run(&["thue", "verify", "--m-range", "-3..3", "--bound", "40"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS m=")).count(), 7);
    assert!(text.contains("all trivial"));

    let o = run(&["thue", "verify", "--bound", "10"]);
    assert_eq!(code(&o), 2);
    let o = run(&["thue", "verify", "--m-range", "3..1", "--bound", "10"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_identities_and_mutation() {
    let o = run(&["verify", "identities"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = run(&["verify", "identities", "--mutate", "b", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let failed: Vec<_> = json_lines(&o)
        .into_iter()
        .filter(|r| r["kind"] == "check" && r["passed"] == false)
        .map(|r| r["item"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, ["b"]);
}

#[test]
fn verify_table2() {
    let o = run(&["verify", "table2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("22/22 passed\n"));

    let o = run(&["verify", "table2", "--mutate=-1,5"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn sextic_scan_is_empty_and_mutation_is_caught() {
    let o = run(&["scan", "sextic", "--range", "-10..10", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["found"], 0);
    assert_eq!(lines[0]["matches_expected"], true);

    let o = run(&["scan", "sextic", "--range", "-10..10", "--mutate", "accept-222", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let pairs: Vec<(i64, i64)> = json_lines(&o)
        .iter()
        .filter(|r| r["kind"] == "sextic")
        .map(|r| (r["m"].as_i64().unwrap(), r["n"].as_i64().unwrap()))
        .collect();
    assert!(pairs.contains(&(-1, 5)) && pairs.contains(&(0, 3)), "{pairs:?}");
}

#[test]
fn cubic_scan_matches_known_pairs() {
    let o = run(&["scan", "cubic", "--range", "-1..60", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,m,n,dt1,dt2,degree"));
    let pairs: Vec<String> = lines.map(|l| l.splitn(4, ',').take(3).collect::<Vec<_>>().join(",")).collect();
    assert_eq!(
        pairs,
        ["cubic,-1,5", "cubic,-1,12", "cubic,0,3", "cubic,0,54", "cubic,3,54", "cubic,5,12"]
    );
}

#[test]
fn checkpoint_resume_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let base = ["scan", "cubic", "--range", "-1..80", "--format", "json", "--checkpoint-interval", "4"];
    let full = sextic(dir.path(), &[&base[..], &["--no-checkpoint"]].concat());
    assert_eq!(code(&full), 0);

    let halted = sextic(dir.path(), &[&base[..], &["--halt-after-rows", "20"]].concat());
    assert_eq!(code(&halted), 3);
    assert!(dir.path().join(".sextic-cache/scan-cubic--1_80.jsonl").exists());

    let resumed = sextic(dir.path(), &base);
    assert_eq!(code(&resumed), 0);
    assert!(String::from_utf8_lossy(&resumed.stderr).contains("resumed at m = "));
    assert_eq!(stdout(&full), stdout(&resumed));

    // A second run replays every block and does no new work.
    let again = sextic(dir.path(), &base);
    assert_eq!(stdout(&full), stdout(&again));
}

#[test]
fn checkpoint_header_mismatch_is_internal_error() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    std::fs::create_dir_all(&cache).unwrap();
    std::fs::write(
        cache.join("scan-sextic--5_5.jsonl"),
        "{\"format\":\"sextic-scan-checkpoint/1\",\"version\":\"0.0.0\",\"kind\":\"sextic\",\"lo\":-5,\"hi\":5,\
         \"max_primes\":3,\"accept_quadratic_split\":false}\n",
    )
    .unwrap();
    let args = ["scan", "sextic", "--range", "-5..5", "--cache-dir", "cache"];
    let o = sextic(dir.path(), &args);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--fresh"));

    let o = sextic(dir.path(), &[&args[..], &["--fresh"]].concat());
    assert_eq!(code(&o), 0);
}

#[test]
fn cache_dir_env_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(["scan", "sextic", "--range", "0..3"])
        .current_dir(dir.path())
        .env("CACHE_DIR", "from-env")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("from-env/scan-sextic-0_3.jsonl").exists());

    let o = Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(["scan", "sextic", "--range", "0..3", "--cache-dir", "from-flag"])
        .current_dir(dir.path())
        .env("CACHE_DIR", "from-env")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("from-flag/scan-sextic-0_3.jsonl").exists());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = sextic(dir.path(), &["verify", "table2", "--format", "json", "--out", "t2.jsonl"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("t2.jsonl")).unwrap();
    assert_eq!(text.lines().count(), 23);
    assert!(!dir.path().join("t2.jsonl.partial").exists());
}

#[test]
fn no_color_and_non_tty_output_is_plain() {
    let o = Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(["verify", "table2"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert!(!stdout(&o).contains('\u{1b}'));
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/results.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Required keys of every `$defs` entry whose `kind` admits `kind`.
fn required_sets(schema: &Value, kind: &str) -> Vec<Vec<String>> {
    let defs = schema["$defs"].as_object().unwrap();
    defs.values()
        .filter(|d| {
            let k = &d["properties"]["kind"];
            k["const"] == kind || k["enum"].as_array().is_some_and(|e| e.iter().any(|v| v == kind))
        })
        .map(|d| d["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect())
        .collect()
}

#[test]
fn json_records_carry_schema_keys() {
    let schema = schema();
    let runs: &[&[&str]] = &[
        &["form", "eval", "--m", "1/2", "--x", "3", "--y", "-1"],
        &["poly", "factor", "--s", "3"],
        &["iso", "--a", "1", "--b", "1"],
        &["intersect", "--a", "-1", "--b", "12"],
        &["thue", "solve", "--m", "0", "--lambda", "-27", "--bound", "10"],
        &["thue", "verify", "--m", "1", "--bound", "10"],
        &["scan", "cubic", "--range", "-6..6"],
        &["verify", "table2"],
    ];
    let mut kinds = std::collections::BTreeSet::new();
    for args in runs {
        let o = run(&[args, &["--format", "json"][..]].concat());
        assert_eq!(code(&o), 0, "{args:?}");
        for rec in json_lines(&o) {
            let obj = rec.as_object().unwrap();
            let kind = obj["kind"].as_str().unwrap();
            kinds.insert(kind.to_string());
            let sets = required_sets(&schema, kind);
            assert!(!sets.is_empty(), "unknown kind {kind}");
            let keys: Vec<&String> = obj.keys().collect();
            assert!(
                sets.iter().any(|req| req.len() == keys.len() && req.iter().all(|k| obj.contains_key(k))),
                "{kind} record {rec} does not match the schema"
            );
        }
    }
    for k in ["form", "factorization", "iso", "intersection", "solution", "thue", "cubic", "check", "summary"] {
        assert!(kinds.contains(k), "no {k} record produced");
    }
}
