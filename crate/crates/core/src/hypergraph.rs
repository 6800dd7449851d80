//! Hypergraphs over a vertex universe, covers and covering numbers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::solver;
use crate::vertex_set::VertexSet;

/// Largest universe [`Hypergraph::covering_number_bruteforce`] accepts.
pub const BRUTEFORCE_GUARD: usize = 24;

/// A hypergraph on `0..n`. Edges are kept in insertion order and may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

/// Outcome of a minimum-cover computation.
///
/// `tau` and `witness` are present exactly when `feasible` is set. The
/// witness is the minimum cover whose sorted vertex list is
/// lexicographically smallest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub feasible: bool,
    pub tau: Option<usize>,
    pub witness: Option<VertexSet>,
}

impl CoverResult {
    pub fn infeasible() -> Self {
        Self {
            feasible: false,
            tau: None,
            witness: None,
        }
    }

    pub fn found(witness: VertexSet) -> Self {
        Self {
            feasible: true,
            tau: Some(witness.len()),
            witness: Some(witness),
        }
    }
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for e in &edges {
            if e.bound() > n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.bound() - 1,
                    n,
                });
            }
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(VertexSet::is_empty)
    }

    pub fn is_cover(&self, c: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(c))
    }

    /// Inclusion-minimal edges, deduplicated and sorted.
    pub fn clutter(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        edges.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(edges.len());
        for e in edges {
            // Everything already kept is no larger than `e`.
            if !kept.iter().any(|k| k.is_subset(&e)) {
                kept.push(e);
            }
        }
        kept.sort();
        Self {
            n: self.n,
            edges: kept,
        }
    }

    /// Alias for [`Hypergraph::clutter`].
    pub fn reduce_to_clutter(&self) -> Self {
        self.clutter()
    }

    /// Edges sorted lexicographically and deduplicated, for set comparisons.
    pub fn edge_set(&self) -> Vec<VertexSet> {
        let mut e = self.edges.clone();
        e.sort();
        e.dedup();
        e
    }

    /// Exact covering number by branch and bound on the clutter.
    pub fn covering_number(&self) -> CoverResult {
        solver::minimum_cover(self)
    }

    /// Covering number with some minimum cover as witness. Faster than
    /// [`Self::covering_number`] when the witness need not be canonical.
    pub fn any_minimum_cover(&self) -> CoverResult {
        solver::any_minimum_cover(self)
    }

    /// Whether some cover of size at most `budget` exists.
    pub fn has_cover_within(&self, budget: usize) -> bool {
        solver::cover_within(self, budget).is_some()
    }

    /// Some cover of size at most `budget`, if one exists. Not canonical.
    pub fn cover_within(&self, budget: usize) -> Option<VertexSet> {
        solver::cover_within(self, budget)
    }

    /// Covering number by enumerating vertex subsets by size, then
    /// lexicographically. Independent of the branch-and-bound solver.
    pub fn covering_number_bruteforce(&self) -> Result<CoverResult> {
        if self.n > BRUTEFORCE_GUARD {
            return Err(Error::GuardExceeded {
                size: self.n,
                guard: BRUTEFORCE_GUARD,
                what: "brute-force cover enumeration",
            });
        }
        if self.has_empty_edge() {
            return Ok(CoverResult::infeasible());
        }
        Ok(first_subset_by_size(self.n, |c| self.is_cover(c))
            .map(CoverResult::found)
            .unwrap_or_else(CoverResult::infeasible))
    }

    /// The complete `q`-rose of order `n`: every `q`-subset of `0..n`.
    pub fn complete_rose(n: usize, q: usize) -> Result<Self> {
        if q < 2 || q >= n {
            return Err(Error::InvalidParameter(format!(
                "complete rose needs 2 <= q < n, got n={n}, q={q}"
            )));
        }
        let mut edges = Vec::new();
        let mut combo: Vec<usize> = (0..q).collect();
        loop {
            edges.push(combo.iter().copied().collect());
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        Self::new(n, edges)
    }

    /// `true` when every edge of `other` contains some edge of `self`, so
    /// that every cover of `self` covers `other`.
    pub fn precedes(&self, other: &Hypergraph) -> bool {
        other
            .edges
            .iter()
            .all(|f| self.edges.iter().any(|e| e.is_subset(f)))
    }
}

/// Advances `combo` to the next `k`-combination of `0..n` in lexicographic
/// order. Returns `false` after the last one.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// First subset of `0..n` (by size, then lexicographically) satisfying `pred`.
pub(crate) fn first_subset_by_size(
    n: usize,
    mut pred: impl FnMut(&VertexSet) -> bool,
) -> Option<VertexSet> {
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let set: VertexSet = combo.iter().copied().collect();
            if pred(&set) {
                return Some(set);
            }
            if size == 0 || !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    None
}
