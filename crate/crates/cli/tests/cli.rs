use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use lettericity_cli::document::InstanceDocument;
use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lettericity"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut input = child.stdin.take().unwrap();
        input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn run_file(cmd: &[&str], file: &str) -> (i32, Value) {
    let path = fixture(file);
    let mut args = cmd.to_vec();
    args.push(path.to_str().unwrap());
    let out = run(&args, None);
    (out.status.code().unwrap(), json_of(&out))
}

#[test]
fn banane_word() {
    let (code, v) = run_file(&["retrieve-word"], "banane.json");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "solution");
    assert_eq!(v["word"], json!(["b", "a", "n", "a", "n", "e"]));
}

#[test]
fn abbaba_decoders() {
    let (code, v) = run_file(&["retrieve-decoder"], "abbaba.json");
    assert_eq!(code, 0);
    assert_eq!(v["decoder"], json!([["a", "b"]]));
    let (code, v) = run_file(&["retrieve-decoder", "--all"], "abbaba.json");
    assert_eq!(code, 0);
    assert_eq!(v["decoders"], json!([[["a", "b"]]]));
}

#[test]
fn bcbacb_decoder() {
    let (code, v) = run_file(&["retrieve-decoder"], "bcbacb.json");
    assert_eq!(code, 0);
    assert_eq!(v["decoder"], json!([["b", "a"], ["b", "c"]]));
}

#[test]
fn path_values() {
    let (code, v) = run_file(&["nd"], "p4.json");
    assert_eq!(code, 0);
    assert_eq!(v["nd"], 4);
    let (_, v) = run_file(&["sym-lettericity"], "p4.json");
    assert_eq!(v["symmetric_lettericity"], 4);
    let (_, v) = run_file(&["sym-lettericity", "--brute"], "p4.json");
    assert_eq!(v["symmetric_lettericity"], 4);
    let (code, v) = run_file(&["lettericity", "--max-k", "4"], "p4.json");
    assert_eq!(code, 0);
    assert_eq!(v["lettericity"], 2);
    let (code, v) = run_file(&["lettericity", "--max-k", "1", "--jobs", "2"], "p4.json");
    assert_eq!(code, 1);
    assert_eq!(v["status"], "infeasible");
}

#[test]
fn decode_verify_and_coloring() {
    let doc = r#"{"word":["b","a","n","a","n","e"],"decoder":[["b","a"],["a","n"],["n","e"]]}"#;
    let out = run(&["decode", "-"], Some(doc));
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 7);

    // feed the decoded graph back as a coloring-retrieval instance
    let inst = json!({
        "graph": v["graph"],
        "word": ["b","a","n","a","n","e"],
        "decoder": [["b","a"],["a","n"],["n","e"]],
    });
    let out = run(&["retrieve-coloring"], Some(&inst.to_string()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["coloring"], v["coloring"]);

    let (code, v) = run_file(&["verify"], "abbaba.json");
    assert_eq!(code, 2, "abbaba has no decoder: {v}");
    let mut abbaba: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("abbaba.json")).unwrap()).unwrap();
    abbaba["decoder"] = json!([["a", "b"]]);
    let out = run(&["verify"], Some(&abbaba.to_string()));
    assert_eq!(out.status.code(), Some(0));
    abbaba["decoder"] = json!([["b", "a"]]);
    let out = run(&["verify"], Some(&abbaba.to_string()));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes_for_bad_input() {
    let out = run(&["nd"], Some("{not json"));
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(json_of(&out)["status"], "error");

    let out = run(
        &["nd"],
        Some(r#"{"graph":{"vertices":["x"],"edges":[["x","y"]]}}"#),
    );
    assert_eq!(out.status.code(), Some(2));

    let big = json!({
        "graph": {"vertices": (1..=9).map(|i| i.to_string()).collect::<Vec<_>>(), "edges": []},
        "coloring": (1..=9).map(|i| (i.to_string(), Value::from(((b'a' + (i % 5) as u8) as char).to_string()))).collect::<serde_json::Map<_, _>>(),
        "word": ["a","b","c","d","e","b","c","d","e"],
    });
    let out = run(&["retrieve-decoder", "--all"], Some(&big.to_string()));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn generation_is_deterministic() {
    let args = [
        "gen", "--seed", "1", "--n", "6", "--k", "2", "--mode", "word",
    ];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let text = String::from_utf8(a.stdout).unwrap();
    let doc = InstanceDocument::parse(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    let out = run(&["retrieve-word"], Some(&text));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn generated_instances_solve_in_every_mode() {
    for (mode, cmd) in [
        ("word", "retrieve-word"),
        ("decoder", "retrieve-decoder"),
        ("coloring", "retrieve-coloring"),
    ] {
        for seed in 0..10 {
            let seed = seed.to_string();
            let out = run(
                &[
                    "gen", "--seed", &seed, "--n", "7", "--k", "3", "--mode", mode,
                ],
                None,
            );
            let text = String::from_utf8(out.stdout).unwrap();
            let solved = run(&[cmd], Some(&text));
            assert_eq!(solved.status.code(), Some(0), "{mode} seed {seed}");
        }
    }
}

#[test]
fn seed_seven_is_an_oracle_confirmed_no() {
    let out = run(
        &[
            "gen",
            "--seed",
            "7",
            "--n",
            "5",
            "--k",
            "3",
            "--mode",
            "decoder",
            "--feasible",
            "false",
        ],
        None,
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["meta"]["oracle"], "confirmed infeasible");
    let all = run(&["retrieve-decoder", "--all"], Some(&text));
    assert_eq!(all.status.code(), Some(1));
    let fast = run(&["retrieve-decoder"], Some(&text));
    assert_eq!(fast.status.code(), Some(1));
}
