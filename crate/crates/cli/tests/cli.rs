//! Black-box tests for the `lspace` binary: output contracts, exit codes,
//! JSON round-tripping, and the shipped example grammars.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lspace"))
}

fn example(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name);
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    assert!(
        output.status.success(),
        "exit {:?}, stderr: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn json_of(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(output)).expect("valid JSON output")
}

#[test]
fn derive_prints_one_generation_per_line() {
    let out = run(&["derive", &example("fib.lg"), "--gens", "7"]);
    let lines: Vec<String> = stdout_of(&out)
        .trim_end()
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "0");
    assert_eq!(lines[7], "101011010110110101101");
}

#[test]
fn derive_json_matches_the_text_rows() {
    let out = run(&["derive", &example("xor.lg"), "--gens", "4", "--json"]);
    let value = json_of(&out);
    let generations: Vec<&str> = value["generations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(
        generations,
        vec!["0", "01", "0110", "01101001", "0110100110010110"]
    );
}

#[test]
fn derive_seq_reproduces_the_classic_sentence() {
    let out = run(&["derive-seq", &example("chomsky-2.lg"), "--steps", "64"]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "Sentence");
    assert_eq!(lines[3], "T N Verb NP");
    assert_eq!(lines[9], "the man hit the ball");
}

#[test]
fn map_reads_stdin_and_writes_the_image() {
    let mut child = binary()
        .args(["map", "--expr", "N"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(b"10110\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout_of(&out).trim_end(), "01001");
}

#[test]
fn map_supports_custom_involutions() {
    let mut child = binary()
        .args(["map", "--expr", "MN", "--involution", "a=b,c=c"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(b"a b c\n").unwrap();
    let out = child.wait_with_output().unwrap();
    // N swaps a and b, M reverses; single-character symbols render compactly.
    assert_eq!(stdout_of(&out).trim_end(), "cab");
}

#[test]
fn classify_json_carries_the_contract_fields() {
    let out = run(&["classify", &example("efib1.lg"), "--json"]);
    let value = json_of(&out);
    assert_eq!(value["asymmetry"], "weak");
    assert_eq!(value["symmetric"], false);
    assert_eq!(value["mode"]["index_counts_stumps"], false);
    assert_eq!(value["mode"]["containment_includes_stumps"], true);

    let out = run(&["classify", &example("efib2.lg"), "--json"]);
    let value = json_of(&out);
    assert_eq!(value["asymmetry"], "strong");
    assert_eq!(value["remainder"], "0");

    // Mode flags flow through and change the verdict.
    let out = run(&["classify", &example("efib1.lg"), "--count-stumps", "--json"]);
    let value = json_of(&out);
    assert_eq!(value["asymmetry"], "none");

    // Stripping constants from the containment check promotes efib1 to
    // strong: the bare body `1` does sit inside `01`.
    let out = run(&[
        "classify",
        &example("efib1.lg"),
        "--containment-excludes-stumps",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["asymmetry"], "strong");
    assert_eq!(value["mode"]["containment_includes_stumps"], false);
}

#[test]
fn format_names_the_family() {
    let out = run(&["format", &example("fib.lg"), "--json"]);
    let value = json_of(&out);
    assert_eq!(value["axiom_rule"], "i");
    assert_eq!(value["nonaxiom_rule"], "v");
    assert_eq!(value["family"], "Fib");

    let out = run(&["format", &example("fib-mappable.lg"), "--json"]);
    assert_eq!(json_of(&out)["family"], "fib-mappable");
}

#[test]
fn frustration_reports_conflicts_and_tilings() {
    let out = run(&[
        "frustration",
        "--rule",
        "01->101",
        "--rule",
        "10->0101",
        "--sample",
        "0101",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["verdict"], "frustrated");
    assert_eq!(value["matches"].as_array().unwrap().len(), 3);
    assert_eq!(value["conflicts"].as_array().unwrap().len(), 2);
    assert_eq!(value["distinct_tilings"], 2);
}

#[test]
fn analyze_growth_uses_exact_integer_strings() {
    let out = run(&[
        "analyze",
        &example("fib.lg"),
        "--gens",
        "8",
        "--report",
        "growth",
        "--json",
    ]);
    let value = json_of(&out);
    let generations = value["generations"].as_array().unwrap();
    assert_eq!(generations.len(), 9);
    assert_eq!(generations[8]["counts"]["1"], "21");
    assert_eq!(generations[8]["total"], "34");
}

#[test]
fn analyze_legality_flags_the_bad_grammar() {
    let out = run(&[
        "analyze",
        &example("eq11.lg"),
        "--gens",
        "3",
        "--report",
        "legality",
        "--json",
    ]);
    let value = json_of(&out);
    let rows = value["generations"].as_array().unwrap();
    assert_eq!(rows[3]["legal"], false);
    assert_eq!(rows[3]["violations"][0]["ngram"], "00");
}

#[test]
fn analyze_decompose_names_the_segments() {
    let out = run(&[
        "analyze",
        &example("fib.lg"),
        "--gens",
        "5",
        "--report",
        "decompose",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["kind"], "perfect");
    let segments = value["segments"].as_array().unwrap();
    assert_eq!(segments[0]["generation"], 3);
    assert_eq!(segments[1]["generation"], 4);
}

#[test]
fn analyze_repetition_reports_the_exact_exponent() {
    let out = run(&[
        "analyze",
        &example("xor.lg"),
        "--gens",
        "10",
        "--report",
        "repetition",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["max_exponent"], "2");
    assert_eq!(value["has_cube"], false);
}

#[test]
fn transform_expand_labels_skip_and_preservation() {
    let out = run(&[
        "transform",
        &example("fib.lg"),
        "--expand",
        "0=3",
        "1=5",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["skip"], true);
    assert_eq!(value["preservation"]["preserved"], false);

    let out = run(&[
        "transform",
        &example("fib.lg"),
        "--expand",
        "0=3",
        "1=4",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["skip"], false);
    assert_eq!(value["preservation"]["preserved"], true);
}

#[test]
fn transform_prune_excises_the_chunk() {
    let out = run(&[
        "transform",
        &example("eq13.lg"),
        "--prune",
        "1:101@0",
        "--json",
    ]);
    let value = json_of(&out);
    let rules = value["grammar"]["rules"].as_array().unwrap();
    let rule_1 = rules.iter().find(|r| r["lhs"] == "1").unwrap();
    assert_eq!(rule_1["rhs"].as_array().unwrap().len(), 2);
}

#[test]
fn transform_reduce_emits_a_replayable_step_list() {
    let out = run(&[
        "transform",
        &example("eq13.lg"),
        "--reduce",
        "fib",
        "--bound",
        "10000",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["reduced"], true);
    let steps = value["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    for step in steps {
        assert_eq!(step["kind"], "prune");
        assert_eq!(step["chunk"], "101");
    }

    let out = run(&["transform", &example("xor.lg"), "--reduce", "fib", "--json"]);
    let value = json_of(&out);
    assert_eq!(value["reduced"], false);
    assert_eq!(value["bound_hit"], false);
}

#[test]
fn transform_tree_op_collapse() {
    let out = run(&[
        "transform",
        &example("xor.lg"),
        "--tree-op",
        "collapse",
        "--path",
        "0.0",
        "--gens",
        "1",
        "--json",
    ]);
    let value = json_of(&out);
    let root = &value["roots"][0];
    assert_eq!(root["children"].as_array().unwrap().len(), 1);
    assert_eq!(root["children"][0]["symbol"], "1");
}

#[test]
fn equiv_compares_exact_ratios() {
    let out = run(&[
        "equiv",
        &example("eq19.lg"),
        &example("eq20.lg"),
        "--pair",
        "0,1",
        "--gens",
        "6",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["equal"], true);
    assert_eq!(value["left"][2], "2/3");

    let out = run(&[
        "equiv",
        &example("fib.lg"),
        &example("xor.lg"),
        "--gens",
        "6",
        "--json",
    ]);
    let value = json_of(&out);
    assert_eq!(value["equal"], false);
}

#[test]
fn ca_steps_the_reference_row() {
    let out = run(&[
        "ca", "--table", "00010111", "--state", "01101", "--steps", "1",
    ]);
    let lines: Vec<String> = stdout_of(&out)
        .trim_end()
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(lines, vec!["01101", "11110"]);
}

#[test]
fn reproduce_exits_zero_and_reports_every_check() {
    let started = std::time::Instant::now();
    let out = run(&["reproduce", "--json"]);
    let elapsed = started.elapsed();
    let value = json_of(&out);
    assert_eq!(value["failed"], 0);
    assert!(value["passed"].as_u64().unwrap() > 30);
    assert!(
        elapsed < std::time::Duration::from_secs(60),
        "reproduce took {elapsed:?}"
    );
}

#[test]
fn json_documents_round_trip_for_every_subcommand() {
    let commands: Vec<Vec<String>> = vec![
        vec![
            "derive".into(),
            example("fib.lg"),
            "--gens".into(),
            "6".into(),
        ],
        vec!["derive-seq".into(), example("chomsky-2.lg")],
        vec![
            "tree".into(),
            example("fib.lg"),
            "--gens".into(),
            "3".into(),
        ],
        vec!["map".into(), "--expr".into(), "MN".into()],
        vec!["classify".into(), example("efib2.lg")],
        vec!["format".into(), example("xor.lg")],
        vec![
            "frustration".into(),
            "--rule".into(),
            "01->101".into(),
            "--rule".into(),
            "10->0101".into(),
            "--sample".into(),
            "0101".into(),
        ],
        vec![
            "analyze".into(),
            example("fib.lg"),
            "--gens".into(),
            "6".into(),
            "--report".into(),
            "growth".into(),
        ],
        vec![
            "analyze".into(),
            example("fib.lg"),
            "--gens".into(),
            "6".into(),
            "--report".into(),
            "decompose".into(),
        ],
        vec![
            "transform".into(),
            example("fib.lg"),
            "--expand".into(),
            "0=3".into(),
            "1=4".into(),
        ],
        vec![
            "transform".into(),
            example("eq13.lg"),
            "--reduce".into(),
            "fib".into(),
        ],
        vec!["equiv".into(), example("eq19.lg"), example("eq20.lg")],
        vec![
            "ca".into(),
            "--table".into(),
            "00010111".into(),
            "--state".into(),
            "01101".into(),
        ],
        vec!["reproduce".into()],
    ];
    for mut args in commands {
        args.push("--json".into());
        let mut child = binary()
            .args(&args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .expect("spawn");
        child.stdin.as_mut().unwrap().write_all(b"10110\n").unwrap();
        let out = child.wait_with_output().unwrap();
        let text = stdout_of(&out);
        let parsed: serde_json::Value = serde_json::from_str(&text).expect("parses");
        let rerendered = serde_json::to_string_pretty(&parsed).unwrap();
        let reparsed: serde_json::Value = serde_json::from_str(&rerendered).expect("reparses");
        assert_eq!(parsed, reparsed, "round trip for {args:?}");
    }
}

#[test]
fn exit_codes_separate_usage_from_domain_errors() {
    // Unknown flag: usage error, exit 2 (clap).
    let out = binary()
        .args(["derive", "--no-such-flag"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Malformed mapping expression: usage error, exit 2.
    let out = binary().args(["map", "--expr", "QQ"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Missing file: domain error, exit 1.
    let out = binary()
        .args(["derive", "/no/such/file.lg"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // Duplicate rule in the file: domain error, exit 1.
    let dir = std::env::temp_dir().join("lspace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("dup.lg");
    std::fs::write(&bad, "axiom: 0\n0 -> 1\n0 -> 0 1\n").unwrap();
    let out = binary()
        .args(["derive", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate rule"));
}

#[test]
fn length_cap_env_var_aborts_runaway_derivations() {
    let out = binary()
        .args(["derive", &example("xor.lg"), "--gens", "30"])
        .env("LSPACE_LENGTH_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("over the cap"));

    // The flag overrides the environment.
    let out = binary()
        .args([
            "derive",
            &example("xor.lg"),
            "--gens",
            "12",
            "--length-cap",
            "100000",
        ])
        .env("LSPACE_LENGTH_CAP", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn shipped_examples_match_the_embedded_catalog() {
    for (name, text) in lspace_core::catalog::ALL {
        let path = example(&format!("{name}.lg"));
        let on_disk = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing shipped grammar {path}: {e}"));
        assert_eq!(
            &on_disk, text,
            "{name}.lg drifted from the embedded catalog"
        );
    }
}
