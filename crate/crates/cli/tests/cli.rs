use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

const MUTUAL: &str = "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n";
const SELF_ATTACK: &str = "arg(a).\natt(a,a).\n";
const CHAIN: &str = "arg(a).\narg(b).\natt(a,b).\n";
const FORK: &str = "arg(a).\narg(b).\narg(c).\natt(a,c).\natt(b,c).\n";

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().expect("temp dir"))
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path = self.0.path().join(name);
        std::fs::write(&path, text).expect("write fixture");
        path.to_string_lossy().into_owned()
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arglogic"))
        .args(args)
        .env_remove("ARGLOGIC_MAX_ARGS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn complete_labellings_of_mutual_attack() {
    let f = Files::new();
    let out = run(&["semantics", &f.write("m.apx", MUTUAL), "--semantics", "complete"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let labs: Vec<(String, String)> = v["labellings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| (l["a"].as_str().unwrap().to_string(), l["b"].as_str().unwrap().to_string()))
        .collect();
    let mut expected = vec![("0", "1"), ("1/2", "1/2"), ("1", "0")];
    expected.sort();
    let mut got: Vec<(&str, &str)> = labs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    got.sort();
    assert_eq!(got, expected);
    assert_eq!(v["extensions"].as_array().unwrap().len(), 3);
}

#[test]
fn stable_of_self_attacker_is_empty_not_an_error() {
    let f = Files::new();
    let out = run(&["semantics", &f.write("s.apx", SELF_ATTACK), "-s", "stable"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["labellings"], Value::Array(vec![]));
}

#[test]
fn tgf_is_detected_by_extension_and_stdin_is_accepted() {
    let f = Files::new();
    let out = run(&["semantics", &f.write("m.tgf", "a\nb\n#\na b\nb a\n"), "-s", "grounded"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["labellings"][0]["a"], "1/2");

    let mut child = Command::new(env!("CARGO_BIN_EXE_arglogic"))
        .args(["semantics", "-", "-s", "preferred"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(MUTUAL.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["labellings"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_input_exits_2() {
    let f = Files::new();
    let out = run(&["semantics", &f.write("bad.apx", "arg(a).\natt(a,zz).\n"), "-s", "complete"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
    let out = run(&["semantics", &f.write("bad2.apx", "arg(a"), "-s", "complete"]);
    assert_eq!(code(&out), 2);
    let out = run(&["semantics", "/nonexistent/x.apx", "-s", "complete"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn encodings_print_as_text_and_json() {
    let f = Files::new();
    let path = f.write("c.apx", CHAIN);
    let out = run(&["--output", "text", "encode", &path]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("<->") && text.contains('~'), "{text}");

    let out = run(&["encode", &path, "--encoding", "regular"]);
    let v = json(&out);
    assert_eq!(v["encoding"], "regular");
    assert!(v["formula"].as_str().unwrap().contains("->"));
    assert!(v["ast"].is_object());
}

#[test]
fn model_counts_across_logics() {
    let f = Files::new();
    let path = f.write("m.apx", MUTUAL);
    let count = |extra: &[&str]| {
        let mut args = vec!["models", path.as_str()];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        json(&out)["models"].as_array().unwrap().len()
    };
    assert_eq!(count(&["--logic", "pl2"]), 2);
    assert_eq!(count(&["--logic", "pl3k"]), 2);
    assert_eq!(count(&["--logic", "pl3l"]), 3);
    assert_eq!(count(&["--logic", "fuzzy", "--tnorm", "goedel", "--grid", "4"]), 5);
    // One PL2 model per complete labelling: (0,0) stands for (1/2,1/2).
    assert_eq!(count(&["--logic", "pl2", "--encoding", "regular"]), 3);
}

#[test]
fn equational_grid_and_iteration() {
    let f = Files::new();
    let mutual = f.write("m.apx", MUTUAL);
    let out = run(&["solve", &mutual, "--system", "max", "--grid", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["solutions"].as_array().unwrap().len(), 5);

    let out = run(&["solve", &mutual, "--system", "max", "--iterate", "0", "--exact"]);
    let v = json(&out);
    assert_eq!(v["outcome"], "non-convergent");
    assert_eq!(v["period"], 2);

    let chain = f.write("c.apx", CHAIN);
    let out = run(&["solve", &chain, "--system", "inverse", "--iterate", "a=0,b=1", "--exact"]);
    let v = json(&out);
    assert_eq!(v["outcome"], "fixed-point");
    assert_eq!(v["values"]["a"], "1");
    assert_eq!(v["values"]["b"], "0");

    let out = run(&["solve", &chain, "--system", "inverse", "--iterate", "a=0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn geometrical_singularity_exits_4() {
    let f = Files::new();
    let path = f.write("f.apx", FORK);
    let out = run(&["solve", &path, "--system", "geometrical", "--iterate", "a=1,b=0,c=0", "--exact"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains('c'));
}

#[test]
fn enumeration_cap_exits_3() {
    let f = Files::new();
    let path = f.write("m.apx", MUTUAL);
    assert_eq!(code(&run(&["--max-args", "1", "semantics", &path, "-s", "complete"])), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_arglogic"))
        .args(["models", &path, "--logic", "pl2"])
        .env("ARGLOGIC_MAX_ARGS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    let out = run(&["--max-grid-points", "10", "models", &path, "--logic", "fuzzy", "--grid", "4"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_all_on_fixtures_passes() {
    let out = run(&["verify", "--all", "--fixtures"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 20);
}

#[test]
fn counterexample_witness_is_reported() {
    let out = run(&["verify", "--theorem", "ec2-l-counterexample", "--fixtures"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let meta = &v["reports"][0]["metadata"];
    assert_eq!(meta["ec2_value"], "1");
    assert_eq!(meta["complete"], false);
    let a = meta["assignment"].as_object().unwrap();
    assert!(a.values().any(|x| x == "1/2"));
}

#[test]
fn verify_single_file_and_small_corpus() {
    let f = Files::new();
    let path = f.write("f.apx", FORK);
    let out = run(&["verify", &path, "--theorem", "complete-eq-ec1-l,stable-eq-ec1-k"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["reports"].as_array().unwrap().len(), 2);

    let out = run(&["--output", "text", "verify", "--all", "--corpus", "seed=3", "count=4", "nmax=4"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("all checks passed"));
}

#[test]
fn bad_verify_arguments_exit_2() {
    assert_eq!(code(&run(&["verify", "--all", "--corpus", "p={1.5}"])), 2);
    assert_eq!(code(&run(&["verify", "--all", "--corpus", "nmax=0"])), 2);
    assert_eq!(code(&run(&["verify", "--all", "--corpus", "colour=red"])), 2);
    assert_eq!(code(&run(&["verify", "--theorem", "no-such-theorem", "--fixtures"])), 2);
    assert_eq!(code(&run(&["verify", "--fixtures"])), 2);
    assert_eq!(code(&run(&["generate", "--n", "3", "--p", "-1"])), 2);
}

#[test]
fn generated_framework_round_trips() {
    let f = Files::new();
    let out = run(&["generate", "--n", "5", "--p", "0.3", "--seed", "11"]);
    assert_eq!(code(&out), 0);
    let path = f.write("g.apx", &String::from_utf8(out.stdout).unwrap());
    let out = run(&["semantics", &path, "-s", "grounded"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["labellings"].as_array().unwrap().len(), 1);
}
