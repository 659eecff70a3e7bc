use std::path::PathBuf;
use std::process::Command;

use cli::report::parse_table;
use cli::Report;

fn hopf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopf")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("hopf-cli-{}-{name}", std::process::id()))
}

#[test]
fn verify_kashina_json_round_trips() {
    let (code, out, _) = hopf(&["verify-kashina", "--json"]);
    assert_eq!(code, 0);
    let r = Report::from_json(&out).unwrap();
    assert_eq!(r.command, vec!["verify-kashina", "--json"]);
    assert!(r.pass() && r.checks.iter().any(|c| c.name == "auts.closure"));
    assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn table_and_json_agree() {
    let (_, json, _) = hopf(&["nichols", "--module", "M1", "--cap", "5", "--json"]);
    let (code, table, _) = hopf(&["nichols", "--module", "M1", "--cap", "5", "--table"]);
    assert_eq!(code, 0);
    let r = Report::from_json(&json).unwrap();
    let j: Vec<(String, bool)> = r.checks.iter().map(|c| (c.name.clone(), c.pass)).collect();
    assert_eq!(parse_table(&table), j);
}

#[test]
fn census_counts() {
    let (code, out, _) = hopf(&["simples", "--census", "--json"]);
    assert_eq!(code, 0);
    let r = Report::from_json(&out).unwrap();
    let w = |n: &str| r.checks.iter().find(|c| c.name == n).unwrap().witness.clone();
    assert!(w("simples.one_dim").starts_with("32"));
    assert!(w("simples.two_dim").starts_with("56"));
    assert!(w("simples.total").starts_with("88"));
    assert!(w("simples.sum_of_squares").ends_with("= 256"));
}

#[test]
fn w_module_is_undetermined_with_positive_ranks() {
    let (code, out, _) = hopf(&["nichols", "--module", "W1_100"]);
    assert_eq!(code, 0);
    let r = cli::Report::from_json(&hopf(&["nichols", "--module", "W1_100", "--json"]).1).unwrap();
    let n: nichols::NicholsReport = serde_json::from_str(&r.checks[0].witness).unwrap();
    assert_eq!(n.verdict, nichols::Verdict::Undetermined { cap: 6 });
    assert!(n.ranks.iter().all(|&x| x > 0) && out.contains("Undetermined"));
}

#[test]
fn lifting_exit_codes() {
    assert_eq!(hopf(&["lifting", "U1_1", "--verify"]).0, 0);
    let (code, out, _) = hopf(&["lifting", "U1_1", "--lambda", "1", "--mu", "0", "--verify"]);
    assert_eq!(code, 1);
    assert!(out.contains("not confluent"));
    assert_eq!(hopf(&["lifting", "U1_5", "--mu", "1", "--variant", "completed", "--verify"]).0, 0);
    assert_eq!(hopf(&["lifting", "U1_1", "--zero-compare"]).0, 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec![],
        vec!["frobnicate"],
        vec!["lifting"],
        vec!["lifting", "U99"],
        vec!["lifting", "U1_1", "--alpha", "1"],
        vec!["lifting", "U1_1", "--lambda", "one"],
        vec!["lifting", "U1_1", "--all"],
        vec!["nichols", "--module", "M13"],
        vec!["verify-kashina", "--json", "--table"],
    ] {
        assert_eq!(hopf(&args).0, 2, "{args:?}");
    }
    assert_eq!(hopf(&["--help"]).0, 0);
}

#[test]
fn out_file_and_presentation_file() {
    let pres = tmp("u11.pres");
    std::fs::write(&pres, include_str!("../../liftings/families/U1_1.pres")).unwrap();
    let out = tmp("report.json");
    let p = pres.to_str().unwrap();
    let o = out.to_str().unwrap();
    let (code, stdout, _) = hopf(&["lifting", "--presentation", p, "--verify", "--seed", "3", "--json", "--out", o]);
    assert!(stdout.is_empty());
    let r = Report::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let build = r.checks.iter().find(|c| c.name == "presentation.U1_1.build").unwrap();
    assert!(build.pass, "{}", build.witness);
    assert!(r.checks.iter().any(|c| c.name == "mutation.U1_1.seed3"));
    assert_eq!(code, r.exit_code());
    assert_eq!(hopf(&["lifting", "--presentation", "/nonexistent/file.pres"]).0, 2);
    let _ = std::fs::remove_file(pres);
    let _ = std::fs::remove_file(out);
}

#[test]
fn schema_lists_the_serialized_fields() {
    let schema: serde_json::Value = serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    let (_, out, _) = hopf(&["double", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys = |x: &serde_json::Value| {
        let mut k: Vec<String> = x.as_object().unwrap().keys().cloned().collect();
        k.sort();
        k
    };
    let req = |x: &serde_json::Value| {
        let mut k: Vec<String> =
            x["required"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
        k.sort();
        k
    };
    assert_eq!(keys(&v), req(&schema));
    assert_eq!(keys(&v["checks"][0]), req(&schema["properties"]["checks"]["items"]));
    assert_eq!(keys(&v["timing"]), req(&schema["properties"]["timing"]));
    assert_eq!(keys(&v["timing"]["suites"][0]), req(&schema["properties"]["timing"]["properties"]["suites"]["items"]));
}
