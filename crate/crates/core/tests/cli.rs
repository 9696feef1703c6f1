mod common;

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use wbcc::tablefile::parse_table;
use wbcc::{tables, IsoClassCatalog};

fn wbcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbcc"))
        .args(args)
        .env("WBCC_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    common::data(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_table4_text() {
    let o = wbcc(&["check", &data("table4.txt")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("  solid: true\n"));
    assert!(text.contains("  right_solid: false at "));
    assert!(text.contains("branches: 3\n"));
    assert!(text.contains("  proper_weak: true\n"));
}

fn text_value<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.trim().strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` in text report"))
}

fn pair(v: &Value) -> String {
    let a: Vec<String> = v.as_array().unwrap().iter().map(|e| e.to_string()).collect();
    format!("({})", a.join(", "))
}

#[test]
fn json_and_text_reports_agree() {
    for name in [
        "table1.txt",
        "table2.txt",
        "table3.txt",
        "table4.txt",
        "table5.txt",
        "solid5.txt",
    ] {
        let text = stdout(&wbcc(&["check", &data(name)]));
        let json: Value = serde_json::from_str(&stdout(&wbcc(&["check", "--json", &data(name)]))).unwrap();

        assert_eq!(text_value(&text, "order"), json["order"].to_string());
        for (k, v) in json["classification"].as_object().unwrap() {
            let key = k.strip_prefix("is_").unwrap_or(k);
            assert_eq!(text_value(&text, key), v.to_string(), "{name}: {k}");
        }
        let s = &json["structure"];
        let minimal: Vec<String> = s["minimal_elements"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(
            text_value(&text, "minimal elements"),
            format!("{{{}}}", minimal.join(", "))
        );
        let pairs: Vec<String> = s["order_relation"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| format!("{}<={}", p[0], p[1]))
            .collect();
        assert_eq!(text_value(&text, "order relation"), pairs.join(" "));
        let branches = s["branches"].as_array().unwrap();
        assert_eq!(text_value(&text, "branches"), branches.len().to_string());
        for b in branches {
            let members: Vec<String> = b["members"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
            let key = format!("B({})", b["minimal"]);
            assert!(
                text.contains(&format!("  {key} = {{{}}}\n", members.join(", "))),
                "{name}: {key}"
            );
        }
        let sol = &s["solidity"];
        for flag in ["solid", "right_solid"] {
            let expected = match &sol[format!("{flag}_witness")] {
                Value::Null => sol[flag].to_string(),
                w => format!("{} at {}", sol[flag], pair(w)),
            };
            assert_eq!(text_value(&text, flag), expected, "{name}: {flag}");
        }
        assert_eq!(text_value(&text, "supersolid"), sol["supersolid"].to_string());
        for r in s["identities"].as_array().unwrap() {
            let key = format!("{} {}", r["law"].as_str().unwrap(), r["scope"].as_str().unwrap());
            let expected = match &r["witness"] {
                Value::Null => "holds".to_string(),
                w => format!("fails at {}", pair(w)),
            };
            assert_eq!(text_value(&text, &key), expected, "{name}: {key}");
        }
        for l in s["laws"].as_array().unwrap() {
            let status = l["status"].as_str().unwrap();
            let line = text_value(&text, l["law_id"].as_str().unwrap());
            assert!(line.starts_with(status), "{name}: {line} vs {status}");
        }
    }
}

#[test]
fn check_reports_axiom_failure() {
    let o = wbcc(&["check", &data("broken.txt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(iv) x*y = y*x = 0 => x = y: fails at (0, 1)"));
    let json: Value = serde_json::from_str(&stdout(&wbcc(&["check", "--json", &data("broken.txt")]))).unwrap();
    assert!(json["structure"].is_null());
}

#[test]
fn malformed_file_reports_line() {
    let o = wbcc(&["check", &data("malformed.txt")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("malformed.txt:3"), "{}", stderr(&o));
    assert_eq!(wbcc(&["canon", "/nonexistent/table.txt"]).status.code(), Some(2));
}

#[test]
fn invalid_algebra_is_domain_failure() {
    for cmd in ["branches", "laws", "canon"] {
        assert_eq!(wbcc(&[cmd, &data("broken.txt")]).status.code(), Some(1), "{cmd}");
    }
}

#[test]
fn branches_of_table1() {
    let o = wbcc(&["branches", &data("table1.txt")]);
    assert_eq!(stdout(&o), "minimal elements: {0, 2}\nB(0) = {0, 1}\nB(2) = {2, 3}\n");
}

#[test]
fn laws_command() {
    let o = wbcc(&["laws", &data("table4.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), wbcc::laws::list_laws().len());
    let o = wbcc(&["laws", &data("table4.txt"), "--law", "lemma_3_2"]);
    assert_eq!(stdout(&o), "lemma_3_2: pass\n");
    let o = wbcc(&["laws", &data("table1.txt"), "--law", "lemma_3_2"]);
    assert_eq!(stdout(&o), "lemma_3_2: vacuous\n");
    let o = wbcc(&["laws", &data("table4.txt"), "--law", "no_such_law"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("lemma_3_2"));
}

#[test]
fn canon_and_iso() {
    let o = wbcc(&["canon", &data("table4.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let c = parse_table(&stdout(&o)).unwrap();
    assert_eq!(&c, wbcc::canonical_form(&tables::table4()).table());

    let dir = tempfile::tempdir().unwrap();
    let moved = dir.path().join("moved.txt");
    let t = tables::table4().relabel(&[0, 5, 2, 3, 4, 1]).unwrap();
    std::fs::write(&moved, wbcc::tablefile::format_table(&t)).unwrap();
    let o = wbcc(&["iso", &data("table4.txt"), moved.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "isomorphic\n".into()));
    let o = wbcc(&["iso", &data("table1.txt"), &data("table2.txt")]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "non-isomorphic\n".into()));
    let o = wbcc(&["iso", &data("table1.txt"), &data("table4.txt")]);
    assert_eq!(stdout(&o), "non-isomorphic\n");
}

#[test]
fn enumerate_writes_valid_catalog() {
    let o = wbcc(&["enumerate", "4", "--proper", "--count-only"]);
    assert_eq!(stdout(&o), "2\n");

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("four.cat");
    let o = wbcc(&["enumerate", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let c = IsoClassCatalog::read_file(&out).unwrap();
    assert_eq!(c.len(), 32);
    assert_eq!(c.to_text().as_bytes(), std::fs::read(&out).unwrap().as_slice());

    let o = wbcc(&["enumerate", "5", "--proper", "--solid"]);
    let c = IsoClassCatalog::from_text(&stdout(&o)).unwrap();
    assert_eq!(c.len(), 1);
    let solid5 = wbcc::tablefile::read_table_file(Path::new(&data("solid5.txt"))).unwrap();
    assert!(c.contains(wbcc::canonical_form(&solid5).table()));
}

#[test]
fn enumerate_output_is_deterministic() {
    let a = wbcc(&["enumerate", "5", "--bcc"]);
    let b = Command::new(env!("CARGO_BIN_EXE_wbcc"))
        .args(["enumerate", "5", "--bcc"])
        .env("WBCC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn usage_errors() {
    assert_eq!(wbcc(&["enumerate", "7"]).status.code(), Some(2));
    assert_eq!(wbcc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(wbcc(&[]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_wbcc"))
        .args(["enumerate", "3"])
        .env("WBCC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("WBCC_THREADS"));
}
