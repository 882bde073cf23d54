//! End-to-end runs of the binary: flag handling, exit codes, and output
//! shapes for every subcommand.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ramproof(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramproof"))
        .args(args)
        .env_remove("RAMPROOF_TABLE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn prove_empty_outcome_exits_zero() {
    let out = ramproof(&["prove", "--prime", "2", "--p-length", "2", "--grh"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("4800  865/4608  4.813  28.110"));
    assert!(text.trim_end().ends_with("56"));
}

#[test]
fn prove_residual_outcome_exits_two() {
    let out = ramproof(&[
        "prove",
        "--prime",
        "3",
        "--p-length",
        "2",
        "--grh",
        "--totally-real",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("40   19/18   2.945  25.417"));
    assert!(stderr(&out).contains("unresolved degrees: 18"));
}

#[test]
fn prove_length_one_is_empty_after_one_lookup() {
    let out = ramproof(&["prove", "--prime", "2", "--p-length", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3, "header, one row, final bound");
    assert!(text.trim_end().ends_with("14"));
}

#[test]
fn prove_json_format_round_trips() {
    let out = ramproof(&[
        "prove",
        "--preset",
        "p2len3",
        "--grh",
        "--totally-real",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["request"]["p"], 2);
    assert_eq!(value["rows"][1]["min_num"], 3457);
    assert_eq!(value["outcome"], "empty");
}

#[test]
fn prove_rejects_unknown_scenarios() {
    let out = ramproof(&["prove", "--prime", "5", "--p-length", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no bundled scenario"));

    let out = ramproof(&["prove", "--preset", "p9len9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown preset"));

    let out = ramproof(&["prove", "--preset", "p2len2", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("is for prime 2"));

    let out = ramproof(&["prove"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--prime"));
}

#[test]
fn reproduce_matches_all_bundled_targets() {
    for target in ["table1", "table2", "table3", "appendixA2"] {
        let out = ramproof(&["reproduce", "--target", target]);
        assert_eq!(out.status.code(), Some(0), "target {target}");
        let text = stdout(&out);
        assert!(
            text.trim_end().ends_with(&format!("{target}: match")),
            "target {target}: {text}"
        );
    }
}

#[test]
fn reproduce_rejects_unknown_target() {
    let out = ramproof(&["reproduce", "--target", "table9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reproduce_appendix_document_shape() {
    let out = ramproof(&["reproduce", "--target", "appendixA2"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "[ 20, 36, 36, 36, 60, 60, 72, 120, 120, 360, 720 ]");
    assert_eq!(
        lines[1],
        "[ false, false, true, true, false, true, true, false, true, true, true ]"
    );
}

#[test]
fn minimize_single_degree_and_range() {
    let out = ramproof(&["minimize", "--prime", "2", "--parts", "2", "--degree", "4608"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("min 865/4608 at partition [4, 5]"));

    let out = ramproof(&["minimize", "--prime", "2", "--parts", "2", "--below", "4800"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("min 865/4608 at degree 4608"));
    assert!(text.contains("271 candidates below 4800"));

    let out = ramproof(&[
        "minimize", "--prime", "3", "--parts", "2", "--degree", "162", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["min_num"], "55");
    assert_eq!(value["min_den"], "162");
    assert_eq!(value["partition"], serde_json::json!([2, 2]));
}

#[test]
fn minimize_requires_exactly_one_mode() {
    let out = ramproof(&["minimize", "--prime", "2", "--parts", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--degree or --below"));

    // --degree and --below conflict at the flag level.
    let out = ramproof(&[
        "minimize", "--prime", "2", "--parts", "2", "--degree", "16", "--below", "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sieve_lists_candidates() {
    let out = ramproof(&["sieve", "--preset", "p3len2", "--below", "280"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("13 candidates below 280 for p3len2"));
    assert!(text.contains("18 54 72 90 126 144 162 180 198 216 234 252 270"));

    let out = ramproof(&[
        "sieve", "--prime", "3", "--p-length", "1", "--below", "80", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["count"], 1);
    assert_eq!(value["degrees"], serde_json::json!([72]));
}

#[test]
fn groups_lists_s6_lattice_summary() {
    let out = ramproof(&["groups"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("total: 56 classes, 1455 subgroups"));

    let out = ramproof(&["groups", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["classes"], 56);
    assert_eq!(value["subgroups"], 1455);
}

#[test]
fn groups_order18_eliminates_all_three() {
    let out = ramproof(&["groups", "--order18"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("S3 x C3"));
    assert!(text.contains("(C3 x C3) : C2"));
    assert!(text.contains("D9"));
    assert_eq!(text.matches("eliminated").count(), 3);
    assert_eq!(text.matches("Sylow 3-subgroup has length 1").count(), 2);
    assert_eq!(text.matches("one-dimensional").count(), 4, "three reports + one reason");

    let out = ramproof(&["groups", "--order18", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 3);
    assert_eq!(value[2]["name"], "D9");
    assert_eq!(value[2]["sylow3_length"], 2);
}

#[test]
fn s6_search_reports_eleven_classes() {
    let out = ramproof(&["s6-search"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 11);
    let orders: Vec<u64> = rows.iter().map(|r| r["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![20, 36, 36, 36, 60, 60, 72, 120, 120, 360, 720]);
    assert!(rows[0].get("heart_abs_irred").is_none());
    assert_eq!(rows[10]["abs_irred_dims"][3], serde_json::json!([16, 1]));
}

#[test]
fn s6_search_seed_does_not_change_the_answer() {
    let baseline = stdout(&ramproof(&["s6-search"]));
    let reseeded = stdout(&ramproof(&["s6-search", "--seed", "7"]));
    let base: Vec<serde_json::Value> = serde_json::from_str(&baseline).unwrap();
    let new: Vec<serde_json::Value> = serde_json::from_str(&reseeded).unwrap();
    for (b, n) in base.iter().zip(&new) {
        assert_eq!(b["order"], n["order"]);
        assert_eq!(b["transitive"], n["transitive"]);
        assert_eq!(b["abs_irred_dims"], n["abs_irred_dims"]);
    }
}

#[test]
fn s6_search_check_heart_flags_the_intransitive_order_36_class() {
    let out = ramproof(&["s6-search", "--check-heart"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    let flagged: Vec<&serde_json::Value> = rows
        .iter()
        .filter(|r| r["order"] == 36 && r["transitive"] == false)
        .collect();
    assert_eq!(flagged.len(), 1);
    assert_eq!(flagged[0]["heart_abs_irred"], false);
    assert_eq!(rows[10]["heart_abs_irred"], true, "S6 itself");
}

#[test]
fn identical_flags_give_byte_identical_output() {
    for args in [
        vec!["s6-search", "--check-heart"],
        vec!["prove", "--preset", "p2len2", "--grh"],
        vec!["orders", "--r-max", "4"],
    ] {
        let first = ramproof(&args);
        let second = ramproof(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn orders_surfaces_threshold_and_nearby_value_note() {
    let out = ramproof(&["orders"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Sp4 r=1: 720"));
    assert!(text.contains("Sp4 r=2: 979200 (a nearby value of 979000 is sometimes quoted)"));
    assert!(text.contains("Sz r=3: 29120"));
    assert!(text.contains("smallest large-image order for r <= 5: 29120"));

    let out = ramproof(&["orders", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["min_large_image"], "29120");
}

#[test]
fn orders_suzuki_maximal_listing() {
    let out = ramproof(&["orders", "--suzuki", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cyclic: 7"));
    assert!(text.contains("dihedral: 14"));
    assert!(text.contains("subfield Sz(2^1): 20"));

    let out = ramproof(&["orders", "--suzuki", "4"]);
    assert_eq!(out.status.code(), Some(1), "even exponents are rejected");
}

#[test]
fn odlyzko_lookups_match_table_anchors() {
    let out = ramproof(&["odlyzko", "--grh", "--rd", "32"]);
    assert!(stdout(&out).contains("degree <= 4799"));

    let out = ramproof(&["odlyzko", "--rd", "8"]);
    assert!(stdout(&out).contains("degree <= 13"));

    let out = ramproof(&["odlyzko", "--grh", "--totally-real", "--rd", "128"]);
    assert!(stdout(&out).contains("degree <= 4799"));

    let out = ramproof(&["odlyzko", "--grh", "--degree", "660", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["min_root_disc"], "27.328");

    let out = ramproof(&["odlyzko", "--grh"]);
    assert!(stdout(&out).starts_with("table: grh\n"));
}

#[test]
fn table_dir_override_is_honored() {
    let dir = std::env::temp_dir().join(format!("ramproof-tables-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    // A doctored GRH table: the degree bound at rd 32 becomes 99.
    fs::write(
        dir.join("grh_general.tbl"),
        "#grh=1 totally_real=0\n100,32.000\n",
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ramproof"))
        .args(["odlyzko", "--grh", "--rd", "32"])
        .env("RAMPROOF_TABLE_DIR", &dir)
        .output()
        .unwrap();
    assert!(stdout(&out).contains("degree <= 99"), "{}", stdout(&out));

    // A missing directory is an error, not a silent fallback.
    let out = Command::new(env!("CARGO_BIN_EXE_ramproof"))
        .args(["odlyzko", "--grh", "--rd", "32"])
        .env("RAMPROOF_TABLE_DIR", Path::new("/nonexistent/tables"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn help_and_version_exit_zero() {
    let out = ramproof(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for sub in [
        "prove",
        "reproduce",
        "minimize",
        "sieve",
        "groups",
        "s6-search",
        "orders",
        "odlyzko",
    ] {
        assert!(text.contains(sub), "help lists {sub}");
    }

    let out = ramproof(&["--version"]);
    assert_eq!(out.status.code(), Some(0));

    let out = ramproof(&["not-a-command"]);
    assert_eq!(out.status.code(), Some(1));
}
