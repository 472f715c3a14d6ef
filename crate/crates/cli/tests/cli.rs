use std::fs;

use qindset_cli::{run, RunReport};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qindset").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn reports(stdout: &str) -> Vec<RunReport> {
    stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn maximal_is_on_p3_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.col");
    fs::write(&path, "c path on three vertices\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
    let (code, out, _) = call(&["maximal-is", "--input", path.to_str().unwrap(), "--model", "matrix", "--seed", "7"]);
    assert_eq!(code, 0);
    let r = &reports(&out)[0];
    assert_eq!(r.result_set, "{1,3}");
    assert_eq!(r.result_size, 2);
    assert_eq!(r.model, "matrix");
    assert_eq!(r.matrix_queries, 2);
}

#[test]
fn oct_on_five_cycle() {
    let (code, out, _) = call(&["oct", "--gen", "cycle:5"]);
    assert_eq!(code, 0);
    assert_eq!(reports(&out)[0].result_size, 1);
}

#[test]
fn per_component_oct_is_flagged() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.col");
    fs::write(&path, "p edge 6 6\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\n").unwrap();
    let (_, out, _) = call(&["oct", "--input", path.to_str().unwrap()]);
    let r = &reports(&out)[0];
    assert_eq!(r.result_size, 2);
    assert!(r.notes.contains("per_component=true"));
}

#[test]
fn bench_writes_one_row_per_size_and_rep() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let (code, out, err) = call(&[
        "bench", "maximal-is", "--sizes", "32,64,128", "--density", "0.5", "--reps", "20", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(err.contains("fit: cost ~ n^"));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<RunReport> = rdr.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 60);
    let keys: Vec<(usize, usize)> = rows.iter().map(|r| (r.n, r.rep)).collect();
    let expected: Vec<(usize, usize)> = [32, 64, 128].iter().flat_map(|&n| (0..20).map(move |r| (n, r))).collect();
    assert_eq!(keys, expected);
}

#[test]
fn csv_header_is_always_present() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.csv");
    let (code, out, _) = call(&["color", "--gen", "petersen", "--out", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(reports(&out).len(), 1);
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("schema_version,command,source,n,m,seed,rep,run_seed,model,params,"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn verify_examples() {
    let (code, out, _) = call(&["verify", "--scope", "gadgets", "--nmax", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["checks"][0]["failures"], 0);
    assert_eq!(v["checks"][0]["counterexamples"].as_array().unwrap().len(), 0);

    let (_, out, _) = call(&["verify", "--scope", "oct", "--nmax", "8"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["checks"][0]["failures"], 0);

    let (_, out, _) = call(&["verify", "--scope", "grover", "--Nmax", "1024"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["checks"][0]["failures"], 0);
    assert!(v["checks"][0]["metrics"]["max_deviation"].as_f64().unwrap() < 1e-9);
}

#[test]
fn other_subcommands() {
    let (_, out, _) = call(&["k-is", "--gen", "cycle:5", "--k", "2"]);
    assert_eq!(reports(&out)[0].result_size, 2);
    let (_, out, _) = call(&["k-is", "--gen", "complete:4", "--k", "2"]);
    assert!(reports(&out)[0].notes.contains("found=false"));

    let (_, out, _) = call(&["maximum-is", "--gen", "petersen", "--reps", "3", "--check"]);
    let rows = reports(&out);
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.trials == 4 && r.charged_cost == 4));

    let (_, out, _) = call(&["color", "--gen", "path:3", "--model", "list"]);
    assert_eq!(reports(&out)[0].result_set, "{1,3}|{2}");

    let (_, out, _) = call(&["adversary", "--family", "B", "--n", "2", "--audit"]);
    let r = &reports(&out)[0];
    assert!(r.notes.contains("f=0"));
    assert!(r.notes.contains("cross_family=6"));
    assert!(r.notes.contains("consistent=true"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.col");
    let (code, _, _) = call(&["adversary", "--family", "A", "--n", "3", "--dimacs", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(fs::read_to_string(&path).unwrap().starts_with("p edge 10 12\n"));

    let (_, out, _) = call(&["maximal-is", "--gen", "gadgetA:2", "--model", "list", "--fail-prob", "0.3", "--reps", "5"]);
    assert_eq!(reports(&out).len(), 5);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["bogus"]).0, 2);
    assert_eq!(call(&["maximal-is"]).0, 2);
    assert_eq!(call(&["maximal-is", "--gen", "path:3", "--input", "x.col"]).0, 2);
    assert_eq!(call(&["maximal-is", "--gen", "wheel:5"]).0, 2);
    assert_eq!(call(&["maximal-is", "--gen", "path:3", "--model", "tree"]).0, 2);
    assert_eq!(call(&["maximal-is", "--input", "/definitely/not/here.col"]).0, 1);
    assert_eq!(call(&["maximal-is", "--gen", "cycle:2"]).0, 1);
    assert_eq!(call(&["maximal-is", "--gen", "path:3", "--fail-prob", "1.5"]).0, 1);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("maximal-is"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.col");
    fs::write(&path, "p edge 3 1\ne 1 4\n").unwrap();
    let (code, _, err) = call(&["oct", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"));
}
