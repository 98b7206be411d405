use std::io::Write;
use std::process::{Command, Output, Stdio};

use sgt_core::commgraph::commuting_graph;
use sgt_core::constructions::{girth_2n_family, symmetric_inverse_monoid};
use sgt_core::enumeration::{collect, EnumerationTask};
use sgt_core::{GraphMetrics, SizeCaps};

fn sgt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgt"))
        .args(args)
        .env_remove("SGT_SIZE_CAP")
        .output()
        .unwrap()
}

fn sgt_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sgt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn order_line(o: &Output) -> usize {
    stdout(o).lines().next().unwrap().parse().unwrap()
}

#[test]
fn build_orders() {
    assert_eq!(order_line(&sgt(&["build", "girth2n", "3"])), 9);
    assert_eq!(order_line(&sgt(&["build", "sym", "3"])), 6);
    assert_eq!(
        order_line(&sgt(&["build", "zerounion", "alt4", "sym3", "sym3"])),
        25
    );
    assert_eq!(order_line(&sgt(&["build", "product", "sym3", "cyc2"])), 12);
    assert_eq!(
        order_line(&sgt(&["build", "rees", "cyc2", "2", "2", "0,0;0,1"])),
        8
    );
    assert_eq!(order_line(&sgt(&["build", "in", "3"])), 34);
    assert_eq!(order_line(&sgt(&["build", "girth4band"])), 4);
}

#[test]
fn build_errors() {
    let o = sgt(&["build", "tn", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("size cap"));
    assert_eq!(sgt(&["build", "widget", "3"]).status.code(), Some(2));
    assert_eq!(sgt(&["build", "girth2n", "2"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_sgt"))
        .args(["build", "tn", "4"])
        .env("SGT_SIZE_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert_eq!(sgt(&[]).status.code(), Some(2));
}

#[test]
fn build_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.sgt");
    let path_str = path.to_str().unwrap();
    let o = sgt(&["build", "girth2n", "4", "--out", path_str]);
    assert!(o.status.success(), "{}", stderr(&o));
    let labels = std::fs::read_to_string(dir.path().join("family.sgt.labels")).unwrap();
    assert_eq!(labels.lines().count(), 16);
    assert_eq!(labels.lines().next(), Some("a0"));

    let g = commuting_graph(&girth_2n_family(4).unwrap()).unwrap();
    let m = GraphMetrics::compute(&g);
    let show = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
    let expected = format!(
        "order=16 vertices={} edges={} girth={} clique={} chromatic={} diameter={}",
        m.vertex_count,
        m.edge_count,
        show(m.girth),
        m.clique_number,
        m.chromatic_number,
        show(m.diameter)
    );
    let o = sgt(&["analyze", path_str]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), format!("girth2n(4): {expected}"));

    let json = sgt(&["analyze", path_str, "--export", "json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(doc["metrics"]["girth"], 8);
    assert_eq!(doc["vertices"][0], "a0");
}

#[test]
fn analyze_examples() {
    let o = sgt(&["analyze", "girth4band", "--girth"]);
    assert_eq!(
        stdout(&o).trim(),
        "girth4band: order=4 vertices=4 edges=4 girth=4"
    );

    let o = stdout(&sgt(&["analyze", "sym3", "--classify"]));
    for flag in [
        "group=true",
        "inverse=true",
        "clifford=true",
        "completely-regular=true",
    ] {
        assert!(o.contains(flag), "{o}");
    }

    let o = stdout(&sgt(&["analyze", "in3", "--knit"]));
    assert!(o.contains(" knit=1 path="), "{o}");
    let o = stdout(&sgt(&["analyze", "in2", "--knit"]));
    assert!(o.contains(" knit=none"), "{o}");

    let o = sgt(&["analyze", "cyc4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("commutative: no commuting graph"));

    let dot = stdout(&sgt(&["analyze", "girth2n3", "--export", "dot"]));
    assert!(dot.starts_with("graph \"girth2n(3)\" {"));
    assert!(dot.contains("label=\"b0^2\""));
    assert_eq!(
        sgt(&["analyze", "sym3", "--export", "png"]).status.code(),
        Some(2)
    );
}

#[test]
fn analyze_reports_parse_errors_with_line_numbers() {
    let o = sgt_with_input(&["analyze"], "2\n0 0\n1 x\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = sgt_with_input(&["analyze", "-"], "2\n0 0\n1 0\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not associative"), "{}", stderr(&o));
}

#[test]
fn enumerate_streams_blocks() {
    let o = sgt(&["enumerate", "--order", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).split("\n\n").count(), 5);
    assert_eq!(stderr(&o).trim(), "5 semigroups");
    assert_eq!(
        stdout(&sgt(&["enumerate", "--order", "1"])),
        "1\n0\n# name: o1#1\n"
    );

    let bands = collect(&EnumerationTask::new(3))
        .unwrap()
        .iter()
        .filter(|s| s.elements().all(|x| s.mul(x, x) == x))
        .count();
    let o = sgt(&["enumerate", "--order", "3", "--class", "band"]);
    assert_eq!(stderr(&o).trim(), format!("{bands} semigroups"));

    let o = sgt(&["enumerate", "--order", "2", "--no-dedup"]);
    assert_eq!(stderr(&o).trim(), "8 semigroups");
    assert_eq!(sgt(&["enumerate", "--order", "5"]).status.code(), Some(2));
    assert_eq!(
        sgt(&["enumerate", "--order", "3", "--class", "abelian"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_pipes_into_analyze() {
    let stream = stdout(&sgt(&["enumerate", "--order", "3", "--non-commutative"]));
    let o = sgt_with_input(&["analyze", "--clique"], &stream);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    let expected = collect(&EnumerationTask::new(3).non_commutative())
        .unwrap()
        .len();
    assert_eq!(lines.len(), expected);
    assert!(lines
        .iter()
        .all(|l| l.starts_with("o3#") && l.contains(" clique=")));
}

#[test]
fn verify_suites() {
    let o = sgt(&["verify", "girth", "--n", "3..6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for n in 3..=6 {
        assert!(text.contains(&format!("PASS girth2n.n{n} ")), "{text}");
    }

    let o = sgt(&["verify", "clique", "--n", "1..4", "--json"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["suite"], "clique");
    assert_eq!(doc["overall"], true);
    let entries = doc["entries"].as_array().unwrap();
    for n in 1..=4 {
        let e = entries
            .iter()
            .find(|e| e["id"] == format!("clique.sym3xc{n}"))
            .unwrap();
        assert_eq!(e["expected"], format!("ω {}", 2 * n));
        assert_eq!(e["actual"], e["expected"]);
        assert_eq!(e["provenance"], "published");
        assert!(e["ms"].is_number());
    }
    let ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);

    let o = sgt(&["verify", "exhaustive", "--max-order", "4", "--json"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let exhaustive = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["provenance"] == "oracle")
        .count();
    assert_eq!(exhaustive, 4);

    assert_eq!(sgt(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(
        sgt(&["verify", "girth", "--n", "6..3"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_all_passes() {
    let o = sgt(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().starts_with("OK: "));
}

#[test]
fn size_cap_applies_to_analysis_specs() {
    let i3 = symmetric_inverse_monoid(3, &SizeCaps::default())
        .unwrap()
        .semigroup;
    let o = Command::new(env!("CARGO_BIN_EXE_sgt"))
        .args(["analyze", "in3"])
        .env("SGT_SIZE_CAP", (i3.order() - 1).to_string())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
