//! Test-Cover instances and the gadget reductions to minimum S-sets.
//!
//! Vertex layout of every reduction graph: the items' copies `M` (copy by
//! copy, items in order), then `R` (four vertices per copy, L only), then
//! one `w(T)` per test, then one gadget block per test in input order,
//! then the gadget of the universe. Inside a block, `b_j` sits at offset
//! `j - 1`. The O-graph is the complement of the I-graph with the same
//! layout.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{CoverResult, Hypergraph};
use crate::kind::SeparationKind;
use crate::separation::{is_s_set, separation_hypergraph};
use crate::vertex_set::{Vertex, VertexSet};

/// Items `0..items`, a list of tests (item subsets) and a budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCoverInstance {
    items: usize,
    tests: Vec<VertexSet>,
    budget: usize,
}

impl TestCoverInstance {
    /// Checks only that tests mention known items; see
    /// [`validate_test_cover`] for the splitting condition.
    pub fn new(items: usize, tests: Vec<VertexSet>, budget: usize) -> Result<Self> {
        for t in &tests {
            if t.bound() > items {
                return Err(Error::InvalidParameter(format!(
                    "test mentions item {} but there are only {items} items",
                    t.bound() - 1
                )));
            }
        }
        Ok(Self {
            items,
            tests,
            budget,
        })
    }

    pub fn items(&self) -> usize {
        self.items
    }

    pub fn tests(&self) -> &[VertexSet] {
        &self.tests
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Same instance with another budget.
    pub fn with_budget(&self, budget: usize) -> Self {
        Self {
            budget,
            ..self.clone()
        }
    }

    /// Hypergraph on the tests with one edge per item pair: the tests that
    /// contain exactly one of the two items.
    pub fn splitting_hypergraph(&self) -> Hypergraph {
        let mut edges = Vec::new();
        for a in 0..self.items {
            for b in a + 1..self.items {
                edges.push(
                    self.tests
                        .iter()
                        .enumerate()
                        .filter(|(_, t)| t.contains(a) != t.contains(b))
                        .map(|(i, _)| i)
                        .collect(),
                );
            }
        }
        Hypergraph::new(self.tests.len(), edges).expect("test indices in range")
    }

    /// Whether the chosen tests (by index) split every item pair.
    pub fn is_test_collection(&self, chosen: &VertexSet) -> bool {
        self.splitting_hypergraph().is_cover(chosen)
    }
}

/// Every pair of items is split by some test. With at least two items,
/// an empty budget is rejected as well.
pub fn validate_test_cover(inst: &TestCoverInstance) -> bool {
    if inst.items <= 1 {
        return true;
    }
    inst.budget > 0 && !inst.splitting_hypergraph().has_empty_edge()
}

fn require_valid(inst: &TestCoverInstance) -> Result<()> {
    if validate_test_cover(inst) {
        Ok(())
    } else if inst.items > 1 && inst.budget == 0 {
        Err(Error::Precondition(
            "budget 0 with two or more items".into(),
        ))
    } else {
        Err(Error::Precondition(
            "some pair of items is not split by any test".into(),
        ))
    }
}

/// Every valid instance with `1..=max_items` items, `1..=max_tests`
/// distinct tests (the empty test included) and budget `0..=max_budget`.
/// Tests are subsets listed by bitmask; instances come out in order of
/// item count, test count, test masks, then budget.
pub fn tiny_family(
    max_items: usize,
    max_tests: usize,
    max_budget: usize,
) -> Vec<TestCoverInstance> {
    fn choose(
        masks: usize,
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for m in start..masks {
            cur.push(m);
            choose(masks, size, m + 1, cur, out);
            cur.pop();
        }
    }
    let mut family = Vec::new();
    for items in 1..=max_items.min(16) {
        let masks = 1usize << items;
        for size in 1..=max_tests.min(masks) {
            let mut combos = Vec::new();
            choose(masks, size, 0, &mut Vec::new(), &mut combos);
            for combo in combos {
                let tests: Vec<VertexSet> = combo
                    .iter()
                    .map(|&m| (0..items).filter(|i| m >> i & 1 == 1).collect())
                    .collect();
                for budget in 0..=max_budget {
                    let inst = TestCoverInstance::new(items, tests.clone(), budget)
                        .expect("tests are in range");
                    if validate_test_cover(&inst) {
                        family.push(inst);
                    }
                }
            }
        }
    }
    family
}

/// Minimum number of tests splitting every pair; the witness lists test
/// indices.
pub fn solve_test_cover(inst: &TestCoverInstance) -> Result<CoverResult> {
    if inst.items > 1 && inst.splitting_hypergraph().has_empty_edge() {
        return Err(Error::Precondition(
            "some pair of items is not split by any test".into(),
        ));
    }
    Ok(inst.splitting_hypergraph().covering_number())
}

/// A gadget graph on `b_1..b_m` (vertex `j - 1` is `b_j`) and its
/// attachment vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    pub attach: VertexSet,
}

fn b(j: usize) -> Vertex {
    j - 1
}

/// Order, edges and attachment labels of a gadget, in `b_j` numbering.
type GadgetSpec = (usize, Vec<(usize, usize)>, Vec<usize>);

fn gadget_edges(s: SeparationKind) -> Result<GadgetSpec> {
    Ok(match s {
        SeparationKind::I => (6, vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)], vec![3]),
        SeparationKind::F => (
            16,
            vec![
                (14, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 15),
                (4, 9),
                (9, 10),
                (10, 13),
                (5, 11),
                (11, 12),
                (12, 16),
            ],
            vec![5],
        ),
        SeparationKind::L => (4, vec![(1, 2), (2, 3), (1, 3), (3, 4)], vec![1, 2]),
        SeparationKind::O => {
            return Err(Error::InvalidParameter(
                "there is no O-gadget; the O-reduction complements the I-reduction".into(),
            ))
        }
    })
}

pub fn build_gadget(s: SeparationKind) -> Result<Gadget> {
    let (m, edges, attach) = gadget_edges(s)?;
    let edges: Vec<_> = edges
        .into_iter()
        .map(|(x, y)| (b(x).min(b(y)), b(x).max(b(y))))
        .collect();
    Ok(Gadget {
        graph: Graph::from_edges(m, &edges)?,
        attach: attach.into_iter().map(b).collect(),
    })
}

/// A reduction graph with its target and named vertex regions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionArtifact {
    pub sep: SeparationKind,
    #[serde(skip)]
    pub graph: Graph,
    pub n: usize,
    pub k: usize,
    /// `m[i][u]` is the `i`-th copy of item `u`.
    pub m: Vec<Vec<Vertex>>,
    /// `r[i]` holds `r^i_1..r^i_4` (L only).
    pub r: Vec<[Vertex; 4]>,
    /// `w[t]` is the vertex of test `t`.
    pub w: Vec<Vertex>,
    /// Gadget blocks per test; `test_gadgets[t][j - 1]` is `b_j(T_t)`.
    pub test_gadgets: Vec<Vec<Vertex>>,
    /// Gadget block of the universe.
    pub universe_gadget: Vec<Vertex>,
}

/// Offsets `(p, q)` in `k = budget + p * |tests| + q`.
pub fn target_coefficients(s: SeparationKind, budget: usize) -> (usize, usize) {
    match s {
        SeparationKind::I | SeparationKind::O => (4, 3),
        SeparationKind::F => (12, 11),
        SeparationKind::L => (2, 2 * budget + 3),
    }
}

impl ReductionArtifact {
    pub fn copies(&self) -> usize {
        self.m.len()
    }

    pub fn m_set(&self) -> VertexSet {
        self.m.iter().flatten().copied().collect()
    }

    pub fn r_set(&self) -> VertexSet {
        self.r.iter().flatten().copied().collect()
    }

    pub fn w_set(&self) -> VertexSet {
        self.w.iter().copied().collect()
    }

    /// Base set `M ∪ R`.
    pub fn q_set(&self) -> VertexSet {
        self.m_set().union(&self.r_set())
    }

    /// All gadget vertices, tests' and universe's.
    pub fn gadget_set(&self) -> VertexSet {
        self.test_gadgets
            .iter()
            .flatten()
            .chain(&self.universe_gadget)
            .copied()
            .collect()
    }

    /// The separation the graph is meant to be solved for.
    pub fn target_kind(&self) -> SeparationKind {
        self.sep
    }

    /// Vertex `b_j` of the gadget of test `t`, or of the universe for `None`.
    pub fn b(&self, t: Option<usize>, j: usize) -> Vertex {
        match t {
            Some(t) => self.test_gadgets[t][j - 1],
            None => self.universe_gadget[j - 1],
        }
    }
}

struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn take(&mut self, count: usize) -> Vec<Vertex> {
        let out = (self.n..self.n + count).collect();
        self.n += count;
        out
    }

    fn join(&mut self, a: Vertex, c: Vertex) {
        self.edges.push((a.min(c), a.max(c)));
    }

    fn gadget(&mut self, g: &Gadget) -> Vec<Vertex> {
        let block = self.take(g.graph.n());
        for (x, y) in g.graph.edges() {
            self.join(block[x], block[y]);
        }
        block
    }
}

/// Builds the reduction graph and target for `s`.
pub fn reduce(inst: &TestCoverInstance, s: SeparationKind) -> Result<ReductionArtifact> {
    require_valid(inst)?;
    if s == SeparationKind::O {
        let mut art = reduce(inst, SeparationKind::I)?;
        art.graph = art.graph.complement();
        art.sep = SeparationKind::O;
        return Ok(art);
    }
    let gadget = build_gadget(s)?;
    let items = inst.items;
    let copies = if s == SeparationKind::L {
        inst.budget + 1
    } else {
        1
    };
    let mut bld = Builder {
        n: 0,
        edges: Vec::new(),
    };

    let m: Vec<Vec<Vertex>> = (0..copies).map(|_| bld.take(items)).collect();
    let r: Vec<[Vertex; 4]> = if s == SeparationKind::L {
        (0..copies)
            .map(|_| bld.take(4).try_into().expect("four vertices"))
            .collect()
    } else {
        Vec::new()
    };
    let w = bld.take(inst.tests.len());
    let test_gadgets: Vec<Vec<Vertex>> = inst.tests.iter().map(|_| bld.gadget(&gadget)).collect();
    let universe_gadget = bld.gadget(&gadget);

    match s {
        SeparationKind::L => {
            for (copy, quad) in m.iter().zip(&r) {
                bld.join(quad[0], quad[1]);
                bld.join(quad[2], quad[3]);
                for &x in quad {
                    for &v in copy {
                        bld.join(x, v);
                    }
                }
            }
        }
        _ => {
            let all: Vec<Vertex> = m.iter().flatten().copied().collect();
            for (i, &a) in all.iter().enumerate() {
                for &c in &all[i + 1..] {
                    bld.join(a, c);
                }
            }
        }
    }
    for (t, test) in inst.tests.iter().enumerate() {
        for copy in &m {
            for u in test.iter() {
                bld.join(w[t], copy[u]);
            }
        }
        for a in gadget.attach.iter() {
            bld.join(w[t], test_gadgets[t][a]);
        }
    }
    for a in gadget.attach.iter() {
        for &v in m.iter().flatten() {
            bld.join(universe_gadget[a], v);
        }
    }

    let (p, q) = target_coefficients(s, inst.budget);
    let graph = Graph::from_edges(bld.n, &bld.edges)?;
    Ok(ReductionArtifact {
        sep: s,
        n: graph.n(),
        graph,
        k: inst.budget + p * inst.tests.len() + q,
        m,
        r,
        w,
        test_gadgets,
        universe_gadget,
    })
}

/// Closed-form vertex count of the reduction graph.
pub fn expected_order(inst: &TestCoverInstance, s: SeparationKind) -> usize {
    let t = inst.tests.len();
    match s {
        SeparationKind::I | SeparationKind::O => inst.items + t + 6 * (t + 1),
        SeparationKind::F => inst.items + t + 16 * (t + 1),
        SeparationKind::L => (inst.budget + 1) * (inst.items + 4) + t + 4 * (t + 1),
    }
}

/// Extends `chosen` (test indices forming a test collection) by further
/// tests in index order until it has `min(budget, |tests|)` elements.
pub fn pad_collection(inst: &TestCoverInstance, chosen: &VertexSet) -> VertexSet {
    let target = inst.budget.min(inst.tests.len());
    let mut out = chosen.clone();
    for t in 0..inst.tests.len() {
        if out.len() >= target {
            break;
        }
        out.insert(t);
    }
    out
}

/// The S-set built from a test collection `chosen` (test indices).
///
/// The construction proper has `|chosen| + k - budget` vertices; when
/// `chosen` has fewer than `budget` tests, the lowest-indexed remaining
/// vertices fill it up to exactly `k` (supersets of S-sets are S-sets).
/// The gadget part keeps all gadgets at their full share
/// except one gadget of a chosen test, which gives up one vertex; that
/// gadget's pendant end is then the unique vertex with an empty trace.
pub fn forward_set(
    art: &ReductionArtifact,
    inst: &TestCoverInstance,
    chosen: &VertexSet,
) -> Result<VertexSet> {
    if chosen.bound() > inst.tests.len() {
        return Err(Error::InvalidParameter(
            "chosen test index out of range".into(),
        ));
    }
    if !inst.is_test_collection(chosen) {
        return Err(Error::Precondition(
            "chosen tests do not split every pair of items".into(),
        ));
    }
    let mut a: VertexSet = chosen.iter().map(|t| art.w[t]).collect();
    // The gadget that gives up a vertex: a chosen test's, or the
    // universe's when nothing is chosen (at most one item then).
    let short = chosen.first();
    let owners = (0..inst.tests.len()).map(Some).chain(std::iter::once(None));
    for owner in owners {
        let is_short = owner == short;
        let picks: Vec<usize> = match art.sep {
            SeparationKind::I | SeparationKind::O => {
                if is_short {
                    vec![2, 3, 4]
                } else {
                    vec![2, 3, 4, 5]
                }
            }
            SeparationKind::F => (1..=12).filter(|&j| !(is_short && j == 8)).collect(),
            SeparationKind::L => {
                if is_short {
                    vec![1]
                } else {
                    vec![1, 3]
                }
            }
        };
        a.extend(picks.into_iter().map(|j| art.b(owner, j)));
    }
    for quad in &art.r {
        a.insert(quad[0]);
        a.insert(quad[2]);
    }
    let mut v = 0;
    while a.len() < art.k && v < art.n {
        a.insert(v);
        v += 1;
    }
    Ok(a)
}

/// Lower bound on gadget (and, for L, `R`) vertices in any S-set.
pub fn gadget_lower_bound(art: &ReductionArtifact, tests: usize) -> usize {
    match art.sep {
        SeparationKind::I | SeparationKind::O => 4 * tests + 3,
        SeparationKind::F => 12 * tests + 11,
        SeparationKind::L => 2 * tests + 2 * (art.copies() - 1) + 3,
    }
}

/// Whether the S-set `a` meets the per-region lower bound.
pub fn check_gadget_lower_bound(art: &ReductionArtifact, a: &VertexSet) -> Result<bool> {
    art.graph.check_set(a)?;
    if !is_s_set(&art.graph, art.sep, a) {
        return Err(Error::Precondition(format!(
            "the set is not an {}-set of the reduction graph",
            art.sep
        )));
    }
    let region = art.gadget_set().union(&art.r_set());
    Ok(a.intersection(&region).len() >= gadget_lower_bound(art, art.test_gadgets.len()))
}

/// Twin structure of the L-graph: every `R` pair is a pair of closed
/// twins, and the copies of an item have equal neighborhoods outside `R`.
pub fn check_l_twins(art: &ReductionArtifact) -> bool {
    if art.sep != SeparationKind::L {
        return false;
    }
    let g = &art.graph;
    let r = art.r_set();
    let pairs_ok = art.r.iter().all(|q| {
        g.closed_neighbors(q[0]) == g.closed_neighbors(q[1])
            && g.closed_neighbors(q[2]) == g.closed_neighbors(q[3])
    });
    let items = art.m.first().map_or(0, Vec::len);
    let copies_ok = (0..items).all(|u| {
        let outside = |v: Vertex| g.neighbors(v).difference(&r);
        art.m
            .iter()
            .all(|copy| outside(copy[u]) == outside(art.m[0][u]))
    });
    pairs_ok && copies_ok
}

/// Largest reduction graph the exact iff check solves by default.
pub const IFF_GUARD: usize = 64;

/// Both sides of the reduction's equivalence on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IffReport {
    pub sep: SeparationKind,
    pub items: usize,
    pub tests: usize,
    pub budget: usize,
    pub n: usize,
    pub k: usize,
    pub test_cover_tau: usize,
    pub test_cover_yes: bool,
    pub graph_yes: bool,
    pub agree: bool,
}

/// Decides both sides exactly: a test collection within the budget, and
/// an S-set of size at most `k` in the reduction graph. Graphs above
/// `guard` vertices are refused.
pub fn verify_reduction_iff(
    inst: &TestCoverInstance,
    s: SeparationKind,
    guard: usize,
) -> Result<IffReport> {
    let art = reduce(inst, s)?;
    if art.n > guard {
        return Err(Error::GuardExceeded {
            size: art.n,
            guard,
            what: "reduction iff check",
        });
    }
    let tc = solve_test_cover(inst)?;
    let tau = tc.tau.expect("valid instances are feasible");
    let test_cover_yes = tau <= inst.budget;
    let graph_yes = separation_hypergraph(&art.graph, art.sep).has_cover_within(art.k);
    Ok(IffReport {
        sep: s,
        items: inst.items,
        tests: inst.tests.len(),
        budget: inst.budget,
        n: art.n,
        k: art.k,
        test_cover_tau: tau,
        test_cover_yes,
        graph_yes,
        agree: test_cover_yes == graph_yes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(items: usize, tests: &[&[usize]], budget: usize) -> TestCoverInstance {
        TestCoverInstance::new(
            items,
            tests.iter().map(|t| t.iter().copied().collect()).collect(),
            budget,
        )
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_test_cover(&inst(3, &[&[0], &[1]], 1)));
        assert!(!validate_test_cover(&inst(2, &[&[0, 1]], 1)));
        assert!(validate_test_cover(&inst(4, &[&[0, 1], &[0, 2]], 1)));
        assert!(!validate_test_cover(&inst(3, &[&[0], &[1]], 0)));
        assert!(validate_test_cover(&inst(1, &[], 0)));
        assert!(TestCoverInstance::new(2, vec![VertexSet::from([2])], 1).is_err());
    }

    #[test]
    fn tiny_family_size() {
        // Counted independently: 2^|U| subsets, 1..=4 of them, budgets 0..=2,
        // keeping split instances with a positive budget when |U| >= 2.
        let f = tiny_family(4, 4, 2);
        assert_eq!(f.len(), 3661);
        assert!(f.iter().all(validate_test_cover));
        assert_eq!(tiny_family(1, 4, 0).len(), 3);
    }

    #[test]
    fn solve_examples() {
        let r = solve_test_cover(&inst(3, &[&[0], &[1], &[0, 2]], 2)).unwrap();
        assert_eq!(r.tau, Some(2));
        assert_eq!(r.witness, Some(VertexSet::from([0, 1])));
        assert_eq!(solve_test_cover(&inst(2, &[&[0]], 1)).unwrap().tau, Some(1));
        assert!(solve_test_cover(&inst(2, &[&[0, 1]], 1)).is_err());
    }

    #[test]
    fn gadgets() {
        let g = build_gadget(SeparationKind::I).unwrap();
        assert_eq!((g.graph.n(), g.graph.edge_count()), (6, 5));
        assert_eq!(g.attach, VertexSet::from([2]));
        let g = build_gadget(SeparationKind::F).unwrap();
        assert_eq!((g.graph.n(), g.graph.edge_count()), (16, 15));
        assert_eq!((g.graph.degree(b(4)), g.graph.degree(b(5))), (3, 3));
        let g = build_gadget(SeparationKind::L).unwrap();
        assert_eq!((g.graph.n(), g.graph.edge_count()), (4, 4));
        assert_eq!(g.attach, VertexSet::from([0, 1]));
        assert!(build_gadget(SeparationKind::O).is_err());
    }

    #[test]
    fn construction_counts() {
        let i = inst(3, &[&[0], &[1]], 2);
        let a = reduce(&i, SeparationKind::I).unwrap();
        assert_eq!((a.n, a.k), (23, 13));
        let a = reduce(&i, SeparationKind::F).unwrap();
        assert_eq!((a.n, a.k), (53, 37));
        let a = reduce(&i, SeparationKind::L).unwrap();
        assert_eq!((a.n, a.k), (35, 13));
        assert_eq!(a.q_set().len(), 21);
        assert_eq!(a.r_set().len(), 12);
        assert!(check_l_twins(&a));
        for s in SeparationKind::ALL {
            assert_eq!(reduce(&i, s).unwrap().n, expected_order(&i, s));
        }
        let o = reduce(&i, SeparationKind::O).unwrap();
        assert_eq!(
            o.graph,
            reduce(&i, SeparationKind::I).unwrap().graph.complement()
        );
    }

    #[test]
    fn layout_order() {
        let i = inst(2, &[&[0]], 1);
        let a = reduce(&i, SeparationKind::L).unwrap();
        assert_eq!(a.m, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(a.r, vec![[4, 5, 6, 7], [8, 9, 10, 11]]);
        assert_eq!(a.w, vec![12]);
        assert_eq!(a.test_gadgets, vec![vec![13, 14, 15, 16]]);
        assert_eq!(a.universe_gadget, vec![17, 18, 19, 20]);
    }

    #[test]
    fn forward_sets_are_s_sets_of_size_k() {
        let i = inst(3, &[&[0], &[1], &[0, 2]], 2);
        for s in SeparationKind::ALL {
            let art = reduce(&i, s).unwrap();
            for chosen in [VertexSet::from([0, 1]), VertexSet::from([0, 2])] {
                let a = forward_set(&art, &i, &chosen).unwrap();
                assert_eq!(a.len(), art.k, "{s}");
                assert!(is_s_set(&art.graph, s, &a), "{s} {chosen:?}");
                assert!(check_gadget_lower_bound(&art, &a).unwrap());
            }
        }
    }

    #[test]
    fn iff_examples() {
        let r =
            verify_reduction_iff(&inst(3, &[&[0], &[1]], 2), SeparationKind::I, IFF_GUARD).unwrap();
        assert!(r.test_cover_yes && r.graph_yes);
        let r =
            verify_reduction_iff(&inst(3, &[&[0], &[1]], 1), SeparationKind::I, IFF_GUARD).unwrap();
        assert!(!r.test_cover_yes && !r.graph_yes);
        let r = verify_reduction_iff(&inst(2, &[&[0]], 1), SeparationKind::L, IFF_GUARD).unwrap();
        assert!(r.agree);
        assert!(matches!(
            verify_reduction_iff(&inst(3, &[&[0], &[1]], 2), SeparationKind::F, 40),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
