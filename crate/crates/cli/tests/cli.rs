use std::process::{Command, Output};

use impsub_core::Suite;
use serde_json::Value;

fn impsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_impsub")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = impsub(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn enumerate_counts() {
    for (n, count) in [(0, 1), (2, 5), (3, 15)] {
        let v = json(&["enumerate", "--n", &n.to_string()]);
        assert_eq!(v["count"], count);
        assert_eq!(v["bell"], count.to_string());
        assert_eq!(v["sublattices"].as_array().unwrap().len(), count);
    }
    let text = stdout(&impsub(&["enumerate", "--n", "2"]));
    assert!(text.ends_with("count 5  bell(n+1) 5\n"));
}

#[test]
fn mobius_examples() {
    let v = json(&["mobius", "--n", "3"]);
    assert_eq!(v["oracle"], "-6");
    assert_eq!(v["method_one"], "-6");
    assert_eq!(v["agree"], true);

    let v = json(&["mobius", "--lower", r#"{"n":2,"base":[0],"blocks":[[1]]}"#]);
    assert_eq!(v["oracle"], "-1");
    assert_eq!(v["size"], 2);

    // An upper endpoint other than B_n has no closed form to compare.
    let v = json(&[
        "mobius",
        "--lower",
        r#"{"n":2,"base":[0,1],"blocks":[]}"#,
        "--upper",
        r#"{"n":2,"base":[],"blocks":[[0,1]]}"#,
    ]);
    assert_eq!(v["oracle"], "-1");
    assert_eq!(v["method_one"], Value::Null);
}

#[test]
fn export_shapes() {
    let dot = stdout(&impsub(&["export", "--n", "2", "--format", "dot"]));
    assert!(dot.starts_with("digraph hasse {"));
    assert_eq!(dot.matches("[label=").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), 6);

    let v = json(&["export", "--n", "3"]);
    assert_eq!(v["members"].as_array().unwrap().len(), 15);

    let a = r#"{"n":3,"base":[1],"blocks":[[0],[2]]}"#;
    let v = json(&["export", "--lower", a, "--upper", a]);
    assert_eq!(v["members"].as_array().unwrap().len(), 1);
    assert_eq!(v["cover_edges"].as_array().unwrap().len(), 0);
}

#[test]
fn identity_and_table_rows() {
    let v = json(&["identity", "--n-max", "5"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4]["closed_form"], "-120");
    assert_eq!(rows[4]["corrected"]["value"], "-120");
    assert_eq!(rows[4]["paper"]["value"], "-24");
    assert!(rows.iter().all(|r| r["match"] == true));

    let v = json(&["table", "--n", "4"]);
    let row = &v["rows"][1];
    assert_eq!(row["k"], 2);
    assert_eq!(row["chain"]["value"], "11");
    assert_eq!(row["composition"], "11");
    assert_eq!(row["composition_printed"], "22");
    assert_eq!(row["oracle"], "11");

    let v = json(&["table", "--n", "12", "--k", "1"]);
    assert_eq!(v["rows"][0]["chain"]["value"], "-39916800");
    assert_eq!(v["rows"][0]["oracle"], Value::Null);
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["verify", "--suite", "method1", "--n-max", "5", "--format", "json"][..],
        &["export", "--n", "3", "--format", "json"][..],
        &["table", "--n", "6", "--format", "json"][..],
    ] {
        assert_eq!(impsub(args).stdout, impsub(args).stdout, "{args:?}");
    }
}

#[test]
fn every_suite_passes_at_small_n() {
    for suite in ["lemmas", "closures", "method1", "method2", "product", "pkb"] {
        let out = impsub(&["verify", "--suite", suite, "--n-max", "3"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert!(stdout(&out).contains("0 failed"));
    }
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["enumerate"],
        &["frobnicate"],
        &["enumerate", "--n", "9"],
        &["verify", "--suite", "nonsense"],
        &["enumerate", "--n", "2", "--format", "dot"],
        &["mobius", "--lower", "{not json"],
        &["mobius", "--lower", r#"{"n":2,"base":[0],"blocks":[[0]]}"#],
        &["table", "--n", "3", "--k", "4"],
        &[
            "mobius",
            "--lower",
            r#"{"n":2,"base":[0],"blocks":[[1]]}"#,
            "--upper",
            r#"{"n":2,"base":[1],"blocks":[[0]]}"#,
        ],
    ];
    for args in cases {
        let out = impsub(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn override_cap_lifts_the_limit() {
    let out = impsub(&["identity", "--n-max", "101"]);
    assert_eq!(out.status.code(), Some(2));
    let out = impsub(&["identity", "--n-max", "101", "--override-cap", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    // 2^100 chains: checked on the raw text, since a JSON value would round it.
    assert!(stdout(&out).contains(&format!("\"chain_count\": {}", 1u128 << 100)));
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("impsub-out-{}.json", std::process::id()));
    let out = impsub(&["enumerate", "--n", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["count"], 15);
}

#[test]
fn full_suite_exercises_every_operation() {
    let ops = Suite::All.operations();
    for op in [
        "complement",
        "implies",
        "meet",
        "join",
        "from_elements",
        "elements",
        "is_sub",
        "enumerate_all",
        "complement_closure",
        "up_closure",
        "is_boolean_subalgebra",
        "is_ultrafilter",
        "apply_atom_permutation",
        "interval",
        "mobius_oracle",
        "closure_theorem_check",
        "closed_suborder",
        "product_decomposition",
        "interval_isomorphism_via_permutation",
        "maximal_chain_length",
        "factorial",
        "stirling2",
        "bell",
        "partition_mobius",
        "method_one_mobius",
        "method_two_paper_sum",
        "method_two_corrected_sum",
        "mu_top_closed_form",
        "p_oracle",
        "p_chain_formula",
        "p_composition_formula",
        "idsix_check",
    ] {
        assert!(ops.contains(&op), "{op} is not covered");
    }
}
