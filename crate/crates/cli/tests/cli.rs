use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use sepcodes_core::format::{parse_graph, write_graph};
use sepcodes_core::separation::{number_bruteforce, separation_hypergraph};
use sepcodes_core::{Family, Kind, SeparationKind};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepcodes"))
        .args(args)
        .env_remove("SEPCODES_GUARD")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn family_file(dir: &TempDir, name: &str, f: Family) -> PathBuf {
    file(dir, name, &write_graph(&f.build().unwrap()))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_matches_bruteforce_on_every_kind() {
    let dir = TempDir::new().unwrap();
    let g = Family::Cycle(6).build().unwrap();
    let path = file(&dir, "c6.txt", &write_graph(&g));
    let out = run(&["compute", "--graph", s(&path), "--kind", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), Kind::all().count());
    for (r, kind) in results.iter().zip(Kind::all()) {
        let want = number_bruteforce(&g, kind).unwrap();
        assert_eq!(r["kind"], kind.to_string());
        assert_eq!(
            r["number"],
            serde_json::to_value(want.tau).unwrap(),
            "{kind}"
        );
        assert_eq!(
            r["witness"],
            serde_json::to_value(&want.witness).unwrap(),
            "{kind}"
        );
    }
}

#[test]
fn infeasible_kind_exits_two_with_obstruction() {
    let dir = TempDir::new().unwrap();
    // The leaves of a star are open twins.
    let path = family_file(&dir, "star.txt", Family::Star(2));
    let out = run(&["compute", "--graph", s(&path), "--kind", "O"]);
    assert_eq!(out.status.code(), Some(2));
    let r = &json(&out)["results"][0];
    assert_eq!(r["feasible"], false);
    assert!(r["obstruction"].as_str().unwrap().contains("twin"));
}

#[test]
fn parse_errors_exit_one_with_line_number() {
    let dir = TempDir::new().unwrap();
    let path = file(&dir, "bad.txt", "3 2\n0 1\n1 1\n");
    let out = run(&["compute", "--graph", s(&path), "--kind", "L"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn guard_refuses_large_graphs() {
    let dir = TempDir::new().unwrap();
    let path = family_file(&dir, "p41.txt", Family::Path(41));
    let out = run(&["compute", "--graph", s(&path), "--kind", "L"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
    let out = run(&[
        "--guard",
        "41",
        "compute",
        "--graph",
        s(&path),
        "--kind",
        "L",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["compute"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_filters_theorems() {
    let dir = TempDir::new().unwrap();
    let path = family_file(&dir, "p5.txt", Family::Path(5));
    let out = run(&["verify", "--graph", s(&path), "--theorems", "3,7,cor2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for report in v["reports"].as_array().unwrap() {
        for check in report["checks"].as_array().unwrap() {
            assert!(["3", "7", "cor2"].contains(&check["group"].as_str().unwrap()));
        }
    }
    let out = run(&["verify", "--graph", s(&path), "--theorems", "99"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn families_writes_a_parseable_graph() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("h4.txt");
    let out = run(&[
        "families",
        "--name",
        "thick_spider",
        "--k",
        "4",
        "--out",
        s(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let g = parse_graph(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(g, Family::ThinSpider(4).build().unwrap().complement());
    // Clique on S plus the 12 cross pairs q_i s_j with i != j.
    assert_eq!(json(&out)["m"], 6 + 12);
    assert_eq!(
        run(&["families", "--name", "wheel", "--k", "4"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn reduce_checks_both_directions() {
    let dir = TempDir::new().unwrap();
    let tc = file(&dir, "tc.txt", "3 2 2\n0\n1\n");
    let graph_out = dir.path().join("g.txt");
    let out = run(&[
        "reduce",
        "--testcover",
        s(&tc),
        "--sep",
        "I",
        "--verify",
        "--out",
        s(&graph_out),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["artifact"]["n"], 23);
    assert_eq!(v["artifact"]["k"], 13);
    assert_eq!(v["forward"]["size"], 13);
    assert_eq!(v["forward"]["is_s_set"], true);
    assert_eq!(v["iff"]["agree"], true);
    let g = parse_graph(&std::fs::read_to_string(&graph_out).unwrap()).unwrap();
    assert_eq!(g.n(), 23);

    // F runs its exact check only when asked to go deep.
    let out = run(&["reduce", "--testcover", s(&tc), "--sep", "F", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["iff"].is_null());
    let out = run(&[
        "reduce",
        "--testcover",
        s(&tc),
        "--sep",
        "F",
        "--verify",
        "--deep",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["iff"]["agree"], true);
}

#[test]
fn reduce_reports_negative_and_invalid_instances() {
    let dir = TempDir::new().unwrap();
    // One item and no budget: the L construction is one vertex short.
    let tc = file(&dir, "one.txt", "1 1 0\n0\n");
    let out = run(&["reduce", "--testcover", s(&tc), "--sep", "L", "--verify"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["iff"]["agree"], false);
    assert_eq!(v["forward"]["is_s_set"], false);

    let unsplit = file(&dir, "unsplit.txt", "2 1 1\n0 1\n");
    assert_eq!(
        run(&["reduce", "--testcover", s(&unsplit), "--sep", "I"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn dump_prints_the_clutter() {
    let dir = TempDir::new().unwrap();
    let g = Family::Path(4).build().unwrap();
    let path = file(&dir, "p4.txt", &write_graph(&g));
    let out = run(&["dump", "--graph", s(&path), "--sep", "I"]);
    assert_eq!(out.status.code(), Some(0));
    let want = separation_hypergraph(&g, SeparationKind::I)
        .clutter()
        .edge_set();
    assert_eq!(json(&out)["edges"], serde_json::to_value(want).unwrap());
}

#[test]
fn spiders_check_reports_table_mismatch() {
    let out = run(&["spiders", "--k", "5", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    // The locating-code entries of the thick spider are off by one at k = 4.
    let out = run(&["spiders", "--k", "4", "--check"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["spiders", "--k", "3"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic_and_pretty_is_line_based() {
    let dir = TempDir::new().unwrap();
    let path = family_file(&dir, "h5.txt", Family::ThinSpider(5));
    let args = ["verify", "--graph", s(&path)];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let pretty = run(&["--pretty", "compute", "--graph", s(&path), "--kind", "I"]);
    let text = String::from_utf8(pretty.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("results[0].number") && l.trim_end().ends_with('6')));
}
