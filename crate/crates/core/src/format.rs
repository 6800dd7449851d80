//! Plain-text formats for graphs, Test-Cover instances and hypergraph dumps.
//!
//! Graph:
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! ```
//! Test-Cover: header `items tests budget`, then one line per test with
//! space-separated item ids; `-` denotes an empty test.
//!
//! Hypergraph dump: header `n e`, then one line per edge (sorted
//! lexicographically), `-` for the empty edge.
//!
//! In all three, lines whose first non-blank character is `#` and blank
//! lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{parse_err, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::reductions::TestCoverInstance;
use crate::vertex_set::VertexSet;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                parse_err(
                    line_no,
                    format!("expected a non-negative integer, found '{tok}'"),
                )
            })
        })
        .collect()
}

/// Upper bound on declared vertex, item and universe counts.
pub const MAX_DECLARED: usize = 1 << 20;

fn check_declared(no: usize, value: usize, what: &str) -> Result<()> {
    if value > MAX_DECLARED {
        return Err(parse_err(
            no,
            format!("{what} {value} exceeds the limit of {MAX_DECLARED}"),
        ));
    }
    Ok(())
}

fn lines_of(text: &str) -> Vec<(usize, &str)> {
    content_lines(text).collect()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = lines_of(text);
    let mut it = lines.iter().copied();
    let (hdr_no, hdr) = it
        .next()
        .ok_or_else(|| parse_err(1, "missing header line 'n m'"))?;
    let nums = numbers(hdr_no, hdr)?;
    let [n, m] = nums[..] else {
        return Err(parse_err(hdr_no, "header must be 'n m'"));
    };
    if n == 0 {
        return Err(parse_err(hdr_no, "graph needs at least one vertex"));
    }
    check_declared(hdr_no, n, "vertex count")?;
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut seen = BTreeSet::new();
    let mut last_line = hdr_no;
    for (no, line) in it {
        last_line = no;
        let nums = numbers(no, line)?;
        let [u, v] = nums[..] else {
            return Err(parse_err(no, "edge line must be 'u v'"));
        };
        if u == v {
            return Err(parse_err(no, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(parse_err(
                no,
                format!("edge endpoints must satisfy u < v, found {u} {v}"),
            ));
        }
        if v >= n {
            return Err(parse_err(
                no,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(no, format!("duplicate edge {u} {v}")));
        }
        if edges.len() == m {
            return Err(parse_err(no, format!("more than the declared {m} edges")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges).map_err(|e| parse_err(hdr_no, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_set_line(no: usize, line: &str, universe: usize, what: &str) -> Result<VertexSet> {
    if line == "-" {
        return Ok(VertexSet::new());
    }
    let mut set = VertexSet::new();
    for x in numbers(no, line)? {
        if x >= universe {
            return Err(parse_err(
                no,
                format!("{what} id {x} out of range for {universe}"),
            ));
        }
        if !set.insert(x) {
            return Err(parse_err(no, format!("{what} id {x} repeated")));
        }
    }
    Ok(set)
}

fn write_set_line(out: &mut String, s: &VertexSet) {
    if s.is_empty() {
        out.push('-');
    } else {
        let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        out.push_str(&parts.join(" "));
    }
    out.push('\n');
}

pub fn parse_test_cover(text: &str) -> Result<TestCoverInstance> {
    let lines = lines_of(text);
    let mut it = lines.iter().copied();
    let (hdr_no, hdr) = it
        .next()
        .ok_or_else(|| parse_err(1, "missing header line 'items tests budget'"))?;
    let nums = numbers(hdr_no, hdr)?;
    let [items, count, budget] = nums[..] else {
        return Err(parse_err(hdr_no, "header must be 'items tests budget'"));
    };
    check_declared(hdr_no, items, "item count")?;
    let mut tests = Vec::new();
    let mut last_line = hdr_no;
    for (no, line) in it {
        last_line = no;
        if tests.len() == count {
            return Err(parse_err(
                no,
                format!("more than the declared {count} tests"),
            ));
        }
        tests.push(parse_set_line(no, line, items, "item")?);
    }
    if tests.len() != count {
        return Err(parse_err(
            last_line,
            format!("declared {count} tests but found {}", tests.len()),
        ));
    }
    TestCoverInstance::new(items, tests, budget).map_err(|e| parse_err(hdr_no, e.to_string()))
}

pub fn write_test_cover(inst: &TestCoverInstance) -> String {
    let mut out = format!(
        "{} {} {}\n",
        inst.items(),
        inst.tests().len(),
        inst.budget()
    );
    for t in inst.tests() {
        write_set_line(&mut out, t);
    }
    out
}

/// Dump of a hypergraph with its edges sorted lexicographically.
pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut edges = h.edges().to_vec();
    edges.sort();
    let mut out = format!("{} {}\n", h.n(), edges.len());
    for e in &edges {
        write_set_line(&mut out, e);
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let lines = lines_of(text);
    let mut it = lines.iter().copied();
    let (hdr_no, hdr) = it
        .next()
        .ok_or_else(|| parse_err(1, "missing header line 'n e'"))?;
    let nums = numbers(hdr_no, hdr)?;
    let [n, e] = nums[..] else {
        return Err(parse_err(hdr_no, "header must be 'n e'"));
    };
    check_declared(hdr_no, n, "universe size")?;
    let mut edges = Vec::new();
    let mut last_line = hdr_no;
    for (no, line) in it {
        last_line = no;
        if edges.len() == e {
            return Err(parse_err(no, format!("more than the declared {e} edges")));
        }
        edges.push(parse_set_line(no, line, n, "vertex")?);
    }
    if edges.len() != e {
        return Err(parse_err(
            last_line,
            format!("declared {e} edges but found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges).map_err(|err| parse_err(hdr_no, err.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::Family;

    fn line_of(r: Result<impl std::fmt::Debug>) -> usize {
        match r {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn graph_roundtrip_and_comments() {
        let text = "# a path\n\n3 2\n0 1\n  # mid comment\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(write_graph(&g), "3 2\n0 1\n1 2\n");
        let h4 = Family::ThinSpider(4).build().unwrap();
        assert_eq!(parse_graph(&write_graph(&h4)).unwrap(), h4);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        assert_eq!(line_of(parse_graph("3 2\n0 1\n0 1\n")), 3);
        assert_eq!(line_of(parse_graph("3 1\n# c\n2 2\n")), 3);
        assert_eq!(line_of(parse_graph("3 1\n0 3\n")), 2);
        assert_eq!(line_of(parse_graph("3 1\n1 0\n")), 2);
        assert_eq!(line_of(parse_graph("3 2\n0 1\n")), 2);
        assert_eq!(line_of(parse_graph("3 1\n0 1\n1 2\n")), 3);
        assert_eq!(line_of(parse_graph("0 0\n")), 1);
        assert_eq!(line_of(parse_graph("3\n")), 1);
        assert_eq!(line_of(parse_graph("3 x\n")), 1);
        assert_eq!(line_of(parse_graph("")), 1);
        assert_eq!(line_of(parse_graph("2 1\n0 1 1\n")), 2);
    }

    #[test]
    fn test_cover_roundtrip() {
        let text = "3 3 2\n0\n-\n0 2\n";
        let inst = parse_test_cover(text).unwrap();
        assert_eq!(inst.tests()[1], VertexSet::new());
        assert_eq!(write_test_cover(&inst), text);
        assert_eq!(line_of(parse_test_cover("2 1 1\n0 2\n")), 2);
        assert_eq!(line_of(parse_test_cover("2 1 1\n0 0\n")), 2);
        assert_eq!(line_of(parse_test_cover("2 2 1\n0\n")), 2);
    }

    #[test]
    fn hypergraph_dump_sorted() {
        let h = Hypergraph::new(
            4,
            vec![
                VertexSet::from([2, 3]),
                VertexSet::new(),
                VertexSet::from([0, 3]),
            ],
        )
        .unwrap();
        let text = write_hypergraph(&h);
        assert_eq!(text, "4 3\n-\n0 3\n2 3\n");
        assert_eq!(parse_hypergraph(&text).unwrap().edge_set(), h.edge_set());
        assert_eq!(line_of(parse_hypergraph("2 1\n0 2\n")), 2);
    }
}
