//! Simple undirected graphs, neighborhoods, complements, twins and the
//! named families used throughout the crate.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kind::{DominationKind, Kind, SeparationKind};
use crate::vertex_set::{Vertex, VertexSet};

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable once built; the adjacency sets are kept symmetric and
/// loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { adj })
    }

    /// Edgeless graph on `n >= 1` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// `N(v)` without a range check.
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v]` without a range check.
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn open_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed_neighbors(v))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, c: &VertexSet) -> Result<()> {
        match c.bound() {
            b if b <= self.n() => Ok(()),
            b => Err(Error::VertexOutOfRange {
                vertex: b - 1,
                n: self.n(),
            }),
        }
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n).difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Self { adj }
    }

    /// Induced subgraph on `keep`, relabelled in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Result<Self> {
        let order = keep.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Self::from_edges(order.len(), &edges)
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Non-adjacent pairs with equal open neighborhoods, `u < v`.
    pub fn open_twins(&self) -> Vec<(Vertex, Vertex)> {
        self.pairs()
            .filter(|&(u, v)| !self.adjacent(u, v) && self.adj[u] == self.adj[v])
            .collect()
    }

    /// Adjacent pairs with equal closed neighborhoods, `u < v`.
    pub fn closed_twins(&self) -> Vec<(Vertex, Vertex)> {
        self.pairs()
            .filter(|&(u, v)| {
                self.adjacent(u, v) && self.closed_neighbors(u) == self.closed_neighbors(v)
            })
            .collect()
    }

    fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    pub fn is_twin_free(&self) -> bool {
        self.open_twins().is_empty() && self.closed_twins().is_empty()
    }

    pub fn admissibility(&self) -> AdmissibilityReport {
        AdmissibilityReport::new(self)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Twin and isolated-vertex structure of a graph, with the resulting
/// existence verdict for every separation kind and code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub isolated: Vec<Vertex>,
    pub open_twins: Vec<(Vertex, Vertex)>,
    pub closed_twins: Vec<(Vertex, Vertex)>,
    pub verdicts: BTreeMap<Kind, bool>,
}

impl AdmissibilityReport {
    fn new(g: &Graph) -> Self {
        let isolated = g.isolated_vertices();
        let open_twins = g.open_twins();
        let closed_twins = g.closed_twins();
        let sep_ok = |s: SeparationKind| match s {
            SeparationKind::L => true,
            SeparationKind::O => open_twins.is_empty(),
            SeparationKind::I => closed_twins.is_empty(),
            SeparationKind::F => open_twins.is_empty() && closed_twins.is_empty(),
        };
        let dom_ok = |d: DominationKind| d == DominationKind::D || isolated.is_empty();
        let verdicts = Kind::all()
            .map(|k| {
                let ok = match k {
                    Kind::Separation(s) => sep_ok(s),
                    Kind::Code(c) => c.separation().is_none_or(sep_ok) && dom_ok(c.domination()),
                };
                (k, ok)
            })
            .collect();
        Self {
            isolated,
            open_twins,
            closed_twins,
            verdicts,
        }
    }

    pub fn has_isolated(&self) -> bool {
        !self.isolated.is_empty()
    }

    pub fn admissible(&self, kind: impl Into<Kind>) -> bool {
        self.verdicts[&kind.into()]
    }

    /// A short human-readable reason why `kind` is inadmissible, if it is.
    pub fn obstruction(&self, kind: impl Into<Kind>) -> Option<String> {
        let kind = kind.into();
        if self.admissible(kind) {
            return None;
        }
        let (sep, dom) = match kind {
            Kind::Separation(s) => (Some(s), DominationKind::D),
            Kind::Code(c) => (c.separation(), c.domination()),
        };
        let open = matches!(sep, Some(SeparationKind::O | SeparationKind::F));
        let closed = matches!(sep, Some(SeparationKind::I | SeparationKind::F));
        if let (true, Some(&(u, v))) = (open, self.open_twins.first()) {
            return Some(format!("open twins {u} and {v}"));
        }
        if let (true, Some(&(u, v))) = (closed, self.closed_twins.first()) {
            return Some(format!("closed twins {u} and {v}"));
        }
        match (dom, self.isolated.first()) {
            (DominationKind::TD, Some(v)) => Some(format!("isolated vertex {v}")),
            _ => None,
        }
    }
}

/// Named graph families with fixed vertex labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path `0-1-..-(n-1)`.
    Path(usize),
    /// Cycle `0-1-..-(n-1)-0`, `n >= 3`.
    Cycle(usize),
    Clique(usize),
    /// `K_{1,n}`: center 0, leaves `1..=n`.
    Star(usize),
    /// Thin headless spider `H_k`: clique `q_i = i`, stable set
    /// `s_i = k + i`, and the matching edges `q_i s_i`.
    ThinSpider(usize),
    /// Thick headless spider: stable set `q_i = i`, clique `s_i = k + i`,
    /// `q_i s_j` adjacent iff `i != j`. Equal to the complement of the thin
    /// spider under the same labeling.
    ThickSpider(usize),
    Empty(usize),
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "path",
        "cycle",
        "clique",
        "star",
        "thin_spider",
        "thick_spider",
        "empty",
    ];

    pub fn parse(name: &str, size: usize) -> Result<Self> {
        Ok(match name {
            "path" => Self::Path(size),
            "cycle" => Self::Cycle(size),
            "clique" => Self::Clique(size),
            "star" => Self::Star(size),
            "thin_spider" => Self::ThinSpider(size),
            "thick_spider" => Self::ThickSpider(size),
            "empty" => Self::Empty(size),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family '{other}' (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }

    pub fn build(self) -> Result<Graph> {
        let bad = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
        match self {
            Self::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            Self::Cycle(n) => {
                if n < 3 {
                    return bad("cycle needs n >= 3");
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((0, n - 1));
                Graph::from_edges(n, &edges)
            }
            Self::Clique(n) => {
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::from_edges(n, &edges)
            }
            Self::Star(leaves) => {
                let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
                Graph::from_edges(leaves + 1, &edges)
            }
            Self::ThinSpider(k) | Self::ThickSpider(k) => {
                if k < 2 {
                    return bad("spiders need k >= 2");
                }
                let thin = matches!(self, Self::ThinSpider(_));
                let mut edges = Vec::new();
                for i in 0..k {
                    for j in i + 1..k {
                        edges.push(if thin { (i, j) } else { (k + i, k + j) });
                    }
                    for j in 0..k {
                        if (i == j) == thin {
                            edges.push((i, k + j));
                        }
                    }
                }
                Graph::from_edges(2 * k, &edges)
            }
            Self::Empty(n) => Graph::edgeless(n),
        }
    }
}

/// Convenience wrapper over [`Family::parse`] and [`Family::build`].
pub fn make_family(name: &str, size: usize) -> Result<Graph> {
    Family::parse(name, size)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kind::CodeKind;

    fn p5() -> Graph {
        Family::Path(5).build().unwrap()
    }

    fn k4() -> Graph {
        Family::Clique(4).build().unwrap()
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(p5().open_neighborhood(2).unwrap(), VertexSet::from([1, 3]));
        assert_eq!(
            k4().open_neighborhood(0).unwrap(),
            VertexSet::from([1, 2, 3])
        );
        let single = Graph::edgeless(1).unwrap();
        assert!(single.open_neighborhood(0).unwrap().is_empty());

        assert_eq!(
            p5().closed_neighborhood(2).unwrap(),
            VertexSet::from([1, 2, 3])
        );
        assert_eq!(
            k4().closed_neighborhood(0).unwrap(),
            VertexSet::from([0, 1, 2, 3])
        );
        assert_eq!(single.closed_neighborhood(0).unwrap(), VertexSet::from([0]));

        assert_eq!(
            p5().open_neighborhood(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        );
        assert!(p5().closed_neighborhood(9).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(Graph::from_edges(0, &[]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_of_p5_is_the_house() {
        let house = p5().complement();
        assert_eq!(house.n(), 5);
        // 10 pairs minus the 4 path edges.
        assert_eq!(house.edge_count(), 6);
        let mut degrees: Vec<_> = (0..5).map(|v| house.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![2, 2, 2, 3, 3]);
        assert_eq!(k4().complement().edge_count(), 0);
    }

    #[test]
    fn thick_spider_is_complement_of_thin() {
        for k in 2..8 {
            let thin = Family::ThinSpider(k).build().unwrap();
            let thick = Family::ThickSpider(k).build().unwrap();
            assert_eq!(thin.complement(), thick);
            assert_eq!(thin.edge_count(), k * (k - 1) / 2 + k);
        }
    }

    #[test]
    fn thin_spider_two_is_p4() {
        let h2 = Family::ThinSpider(2).build().unwrap();
        // q0 - q1 with pendants s0 = 2, s1 = 3: path 2-0-1-3.
        assert_eq!(h2.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        let mut deg: Vec<_> = (0..4).map(|v| h2.degree(v)).collect();
        deg.sort();
        assert_eq!(deg, vec![1, 1, 2, 2]);
        assert!(Family::ThinSpider(1).build().is_err());
    }

    #[test]
    fn family_sizes() {
        assert_eq!(make_family("clique", 4).unwrap().edge_count(), 6);
        assert_eq!(make_family("star", 3).unwrap().n(), 4);
        assert_eq!(make_family("cycle", 5).unwrap().edge_count(), 5);
        assert!(make_family("cycle", 2).is_err());
        assert!(make_family("wheel", 5).is_err());
        assert!(make_family("empty", 0).is_err());
        assert_eq!(make_family("thin_spider", 4).unwrap().edge_count(), 10);
    }

    #[test]
    fn twins_of_star_clique_path() {
        let star = Family::Star(3).build().unwrap();
        let rep = star.admissibility();
        assert_eq!(rep.open_twins, vec![(1, 2), (1, 3), (2, 3)]);
        assert!(rep.closed_twins.is_empty());
        for k in ["O", "OD", "OTD", "F", "FD", "FTD"] {
            assert!(!rep.admissible(k.parse::<Kind>().unwrap()), "{k}");
        }
        for k in ["L", "I", "LD", "ID", "ITD", "TD"] {
            assert!(rep.admissible(k.parse::<Kind>().unwrap()), "{k}");
        }

        let rep = k4().admissibility();
        assert_eq!(rep.closed_twins.len(), 6);
        assert!(rep.open_twins.is_empty());
        for k in ["I", "ID", "ITD", "F", "FD", "FTD"] {
            assert!(!rep.admissible(k.parse::<Kind>().unwrap()), "{k}");
        }
        assert!(rep
            .obstruction(SeparationKind::I)
            .unwrap()
            .contains("closed twins"));

        let rep = p5().admissibility();
        assert!(rep.open_twins.is_empty() && rep.closed_twins.is_empty() && !rep.has_isolated());
        assert!(rep.verdicts.values().all(|&ok| ok));
    }

    #[test]
    fn isolated_vertices_block_total_domination() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let rep = g.admissibility();
        assert_eq!(rep.isolated, vec![2]);
        assert!(!rep.admissible(CodeKind::TD));
        assert!(!rep.admissible(CodeKind::LTD));
        assert!(rep.admissible(CodeKind::D));
        assert_eq!(rep.obstruction(CodeKind::TD).unwrap(), "isolated vertex 2");
    }

    #[test]
    fn open_twins_become_closed_twins_in_complement() {
        for g in [
            p5(),
            k4(),
            Family::Star(4).build().unwrap(),
            Family::Cycle(4).build().unwrap(),
        ] {
            assert_eq!(g.open_twins(), g.complement().closed_twins());
            assert_eq!(g.closed_twins(), g.complement().open_twins());
        }
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = p5();
        let sub = g.induced(&VertexSet::from([1, 2, 4])).unwrap();
        assert_eq!(sub.edges(), vec![(0, 1)]);
    }
}
