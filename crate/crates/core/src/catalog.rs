//! Graph catalogs: all labeled graphs, isomorphism classes and seeded
//! random graphs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::Vertex;

/// Largest order [`labeled_graphs`] enumerates.
pub const LABELED_LIMIT: usize = 7;
/// Largest order [`unlabeled_graphs`] enumerates.
pub const UNLABELED_LIMIT: usize = 9;

fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn from_mask(n: usize, pairs: &[(Vertex, Vertex)], mask: u64) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// Every graph on vertex set `0..n`, in order of the edge bitmask over
/// the lexicographically ordered vertex pairs.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > LABELED_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "labeled enumeration needs 1 <= n <= {LABELED_LIMIT}, got {n}"
        )));
    }
    let p = pairs(n);
    Ok((0..1u64 << p.len()).map(move |mask| from_mask(n, &p, mask)))
}

/// Adjacency as bit rows, for canonical labeling.
fn rows(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | 1 << u))
        .collect()
}

/// Refines an ordered partition until every cell is equitable: vertices in
/// one cell have equal neighbor counts in every cell. Splits keep a
/// deterministic order (by the count vector), so the result is invariant
/// under relabeling.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let changed = next.len() != cells.len();
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// Adjacency code of `g` under the vertex order `order` (position -> vertex).
fn code_of(adj: &[u32], order: &[usize]) -> Vec<u32> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u32;
            let mut bits = adj[v];
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << pos[u];
            }
            row
        })
        .collect()
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut Option<Vec<u32>>) {
    let cells = refine(adj, cells);
    let Some(split) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &cells[split] {
        let mut next = cells.clone();
        let rest: Vec<usize> = next[split].iter().copied().filter(|&u| u != v).collect();
        next[split] = vec![v];
        next.insert(split + 1, rest);
        search(adj, next, best);
    }
}

/// A labeling-independent code of `g`: two graphs get the same code iff
/// they are isomorphic. Individualization-refinement over all branches.
pub fn canonical_code(g: &Graph) -> Vec<u32> {
    let adj = rows(g);
    let mut best = None;
    search(&adj, vec![(0..g.n()).collect()], &mut best);
    let mut code = best.expect("at least one leaf");
    code.insert(0, g.n() as u32);
    code
}

fn graph_from_code(code: &[u32]) -> Graph {
    let n = code[0] as usize;
    let mut edges = Vec::new();
    for (u, row) in code[1..].iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("code rows are in range")
}

/// One representative per isomorphism class on exactly `n` vertices, each
/// in its canonical labeling, sorted by canonical code.
pub fn unlabeled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > UNLABELED_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "unlabeled enumeration needs 1 <= n <= {UNLABELED_LIMIT}, got {n}"
        )));
    }
    let mut level: BTreeSet<Vec<u32>> = BTreeSet::from([canonical_code(&Graph::edgeless(1)?)]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for code in &level {
            let base = graph_from_code(code);
            let old = base.edges();
            for mask in 0..1u64 << (m - 1) {
                let mut edges = old.clone();
                edges.extend(
                    (0..m - 1)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| (i, m - 1)),
                );
                next.insert(canonical_code(&Graph::from_edges(m, &edges)?));
            }
        }
        level = next;
    }
    Ok(level.iter().map(|c| graph_from_code(c)).collect())
}

/// Seeded random graphs with `min_n <= n <= max_n` and a per-graph edge
/// density drawn from `[0.15, 0.85]`.
pub fn random_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>> {
    if min_n == 0 || min_n > max_n {
        return Err(Error::InvalidParameter(format!(
            "random graphs need 1 <= min_n <= max_n, got {min_n}..{max_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p: f64 = rng.gen_range(0.15..=0.85);
            let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
            Graph::from_edges(n, &edges)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert!(labeled_graphs(8).is_err());
    }

    #[test]
    fn unlabeled_counts_match_known_sequence() {
        // Number of graphs on n unlabeled vertices.
        let known = [1, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in known.iter().enumerate() {
            assert_eq!(unlabeled_graphs(i + 1).unwrap().len(), want, "n={}", i + 1);
        }
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let p4 = Family::Path(4).build().unwrap();
        let relabeled = Graph::from_edges(4, &[(0, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(canonical_code(&p4), canonical_code(&relabeled));
        let star = Family::Star(3).build().unwrap();
        assert_ne!(canonical_code(&p4), canonical_code(&star));
        let thin = Family::ThinSpider(2).build().unwrap();
        assert_eq!(canonical_code(&thin), canonical_code(&p4));
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_graphs(20, 2, 9, 7).unwrap();
        let b = random_graphs(20, 2, 9, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (2..=9).contains(&g.n())));
        assert_ne!(a, random_graphs(20, 2, 9, 8).unwrap());
    }
}
