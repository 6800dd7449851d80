//! Separating sets and identification codes.
//!
//! Two independent routes are kept side by side: membership tests work
//! straight from the definitions (pairwise-distinct traces), while the
//! numbers are covering numbers of hypergraphs built from symmetric
//! differences of neighborhoods. The brute-force variants enumerate
//! subsets against the definitions and are used to cross-check.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{first_subset_by_size, CoverResult, Hypergraph};
use crate::kind::{CodeKind, DominationKind, Kind, SeparationKind};
use crate::vertex_set::{Vertex, VertexSet};

/// Largest graph the definition-based brute force accepts.
pub const BRUTEFORCE_GUARD: usize = 16;

/// One symmetric difference together with the pair that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairDifference {
    pub pair: (Vertex, Vertex),
    pub set: VertexSet,
}

/// Symmetric differences of open and closed neighborhoods over all
/// unordered vertex pairs, split by adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaFamilies {
    /// `N(u) △ N(v)` for adjacent `u, v`.
    pub adj_open: Vec<PairDifference>,
    /// `N(u) △ N(v)` for non-adjacent `u, v`.
    pub nonadj_open: Vec<PairDifference>,
    /// `N[u] △ N[v]` for adjacent `u, v`.
    pub adj_closed: Vec<PairDifference>,
    /// `N[u] △ N[v]` for non-adjacent `u, v`.
    pub nonadj_closed: Vec<PairDifference>,
}

impl DeltaFamilies {
    fn sets(list: &[PairDifference]) -> impl Iterator<Item = VertexSet> + '_ {
        list.iter().map(|d| d.set.clone())
    }
}

pub fn delta_families(g: &Graph) -> DeltaFamilies {
    let mut out = DeltaFamilies {
        adj_open: Vec::new(),
        nonadj_open: Vec::new(),
        adj_closed: Vec::new(),
        nonadj_closed: Vec::new(),
    };
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let open = g.neighbors(u).symmetric_difference(g.neighbors(v));
            let closed = g
                .closed_neighbors(u)
                .symmetric_difference(&g.closed_neighbors(v));
            let (o, c) = if g.adjacent(u, v) {
                (&mut out.adj_open, &mut out.adj_closed)
            } else {
                (&mut out.nonadj_open, &mut out.nonadj_closed)
            };
            o.push(PairDifference {
                pair: (u, v),
                set: open,
            });
            c.push(PairDifference {
                pair: (u, v),
                set: closed,
            });
        }
    }
    out
}

/// The S-hypergraph: `C` is an S-set iff `C` covers it.
///
/// | S | adjacent pairs | non-adjacent pairs |
/// |---|----------------|--------------------|
/// | L | `N(u) △ N(v)`  | `N[u] △ N[v]`      |
/// | O | `N(u) △ N(v)`  | `N(u) △ N(v)`      |
/// | I | `N[u] △ N[v]`  | `N[u] △ N[v]`      |
/// | F | `N[u] △ N[v]`  | `N(u) △ N(v)`      |
pub fn separation_hypergraph(g: &Graph, s: SeparationKind) -> Hypergraph {
    let d = delta_families(g);
    let (adj, nonadj) = match s {
        SeparationKind::L => (&d.adj_open, &d.nonadj_closed),
        SeparationKind::O => (&d.adj_open, &d.nonadj_open),
        SeparationKind::I => (&d.adj_closed, &d.nonadj_closed),
        SeparationKind::F => (&d.adj_closed, &d.nonadj_open),
    };
    let edges = DeltaFamilies::sets(adj)
        .chain(DeltaFamilies::sets(nonadj))
        .collect();
    Hypergraph::new(g.n(), edges).expect("differences stay inside the vertex set")
}

fn domination_edges(g: &Graph, d: DominationKind) -> impl Iterator<Item = VertexSet> + '_ {
    (0..g.n()).map(move |v| match d {
        DominationKind::D => g.closed_neighbors(v),
        DominationKind::TD => g.neighbors(v).clone(),
    })
}

/// The X-hypergraph: separation edges of the code's separation kind plus
/// one (closed or open) neighborhood per vertex for its domination kind.
pub fn code_hypergraph(g: &Graph, x: CodeKind) -> Hypergraph {
    let mut edges = match x.separation() {
        Some(s) => separation_hypergraph(g, s).edges().to_vec(),
        None => Vec::new(),
    };
    edges.extend(domination_edges(g, x.domination()));
    Hypergraph::new(g.n(), edges).expect("neighborhoods stay inside the vertex set")
}

pub fn kind_hypergraph(g: &Graph, kind: Kind) -> Hypergraph {
    match kind {
        Kind::Separation(s) => separation_hypergraph(g, s),
        Kind::Code(x) => code_hypergraph(g, x),
    }
}

fn all_distinct(traces: impl Iterator<Item = VertexSet>) -> bool {
    let mut seen = HashSet::new();
    traces.into_iter().all(|t| seen.insert(t))
}

/// Definition check, independent of the hypergraph route. The empty trace
/// counts as a value like any other.
pub fn is_s_set(g: &Graph, s: SeparationKind, c: &VertexSet) -> bool {
    let n = g.n();
    let open = || all_distinct((0..n).map(|v| g.neighbors(v).intersection(c)));
    let closed = || all_distinct((0..n).map(|v| g.closed_neighbors(v).intersection(c)));
    match s {
        SeparationKind::L => all_distinct(
            (0..n)
                .filter(|&v| !c.contains(v))
                .map(|v| g.neighbors(v).intersection(c)),
        ),
        SeparationKind::O => open(),
        SeparationKind::I => closed(),
        SeparationKind::F => open() && closed(),
    }
}

pub fn is_dominating(g: &Graph, d: DominationKind, c: &VertexSet) -> bool {
    domination_edges(g, d).all(|nb| nb.intersects(c))
}

pub fn is_x_code(g: &Graph, x: CodeKind, c: &VertexSet) -> bool {
    is_dominating(g, x.domination(), c) && x.separation().is_none_or(|s| is_s_set(g, s, c))
}

pub fn is_kind_set(g: &Graph, kind: Kind, c: &VertexSet) -> bool {
    match kind {
        Kind::Separation(s) => is_s_set(g, s, c),
        Kind::Code(x) => is_x_code(g, x, c),
    }
}

pub fn s_number(g: &Graph, s: SeparationKind) -> CoverResult {
    separation_hypergraph(g, s).covering_number()
}

pub fn x_number(g: &Graph, x: CodeKind) -> CoverResult {
    code_hypergraph(g, x).covering_number()
}

pub fn number(g: &Graph, kind: Kind) -> CoverResult {
    kind_hypergraph(g, kind).covering_number()
}

/// Minimum set satisfying the definition of `kind`, by subset enumeration
/// in size-then-lexicographic order.
pub fn number_bruteforce(g: &Graph, kind: Kind) -> Result<CoverResult> {
    if g.n() > BRUTEFORCE_GUARD {
        return Err(Error::GuardExceeded {
            size: g.n(),
            guard: BRUTEFORCE_GUARD,
            what: "definition brute force",
        });
    }
    // Every property here is closed under supersets.
    if !is_kind_set(g, kind, &g.vertices()) {
        return Ok(CoverResult::infeasible());
    }
    let found =
        first_subset_by_size(g.n(), |c| is_kind_set(g, kind, c)).expect("the full set qualifies");
    Ok(CoverResult::found(found))
}

pub fn s_number_bruteforce(g: &Graph, s: SeparationKind) -> Result<CoverResult> {
    number_bruteforce(g, s.into())
}

pub fn x_number_bruteforce(g: &Graph, x: CodeKind) -> Result<CoverResult> {
    number_bruteforce(g, x.into())
}
