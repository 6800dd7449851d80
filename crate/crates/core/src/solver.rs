//! Exact minimum hitting set by branch and bound.
//!
//! Works on the clutter of the input. Each node applies unit propagation,
//! bounds with a greedy packing of pairwise disjoint edges, then branches
//! on a smallest uncovered edge: the i-th branch takes the i-th vertex of
//! that edge and excludes the ones before it. The canonical witness is
//! recovered afterwards by fixing vertices in increasing order with
//! bounded feasibility queries.

use crate::hypergraph::{CoverResult, Hypergraph};
use crate::vertex_set::VertexSet;

/// Bitset rows of equal width.
#[derive(Clone)]
struct Rows {
    width: usize,
    data: Vec<u64>,
}

impl Rows {
    fn len(&self) -> usize {
        self.data.len().checked_div(self.width).unwrap_or(0)
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.width..(i + 1) * self.width]
    }
}

fn popcount(r: &[u64]) -> u32 {
    r.iter().map(|w| w.count_ones()).sum()
}

fn has_bit(r: &[u64], v: usize) -> bool {
    r[v / 64] >> (v % 64) & 1 == 1
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

fn bits(r: &[u64]) -> impl Iterator<Item = usize> + '_ {
    r.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

struct Search {
    width: usize,
    limit: usize,
    stop_first: bool,
    best: Option<Vec<u64>>,
}

impl Search {
    /// Explores the subtree rooted at (`edges`, `chosen`). `edges` holds
    /// the uncovered edges with excluded vertices already masked out.
    /// Returns `true` when the search should stop.
    fn run(&mut self, mut edges: Rows, mut chosen: Vec<u64>, mut count: usize) -> bool {
        let w = self.width;

        // Unit propagation, then dominated vertices, until neither applies.
        loop {
            let mut forced: Option<usize> = None;
            for i in 0..edges.len() {
                match popcount(edges.row(i)) {
                    0 => return false,
                    1 => {
                        forced = bits(edges.row(i)).next();
                        break;
                    }
                    _ => {}
                }
            }
            if let Some(v) = forced {
                chosen[v / 64] |= 1 << (v % 64);
                count += 1;
                if count > self.limit {
                    return false;
                }
                edges = remove_hit(&edges, v);
                continue;
            }
            if !drop_dominated(&mut edges) {
                break;
            }
        }

        if edges.len() == 0 {
            self.best = Some(chosen);
            if self.stop_first {
                return true;
            }
            // Strictly better covers only from here on.
            self.limit = count.saturating_sub(1);
            return count == 0;
        }

        if count + packing_bound(&edges) > self.limit {
            return false;
        }
        if count + 1 > self.limit {
            return false;
        }

        // Branch on a smallest edge, most frequent vertices first.
        let pivot = (0..edges.len())
            .min_by_key(|&i| popcount(edges.row(i)))
            .expect("nonempty");
        let mut order: Vec<usize> = bits(edges.row(pivot)).collect();
        let freq: Vec<usize> = order
            .iter()
            .map(|&v| {
                (0..edges.len())
                    .filter(|&i| has_bit(edges.row(i), v))
                    .count()
            })
            .collect();
        let mut idx: Vec<usize> = (0..order.len()).collect();
        idx.sort_by(|&a, &b| freq[b].cmp(&freq[a]).then(order[a].cmp(&order[b])));
        order = idx.into_iter().map(|i| order[i]).collect();

        let mut excluded = vec![0u64; w];
        for &v in &order {
            if count + 1 > self.limit {
                return false;
            }
            let mut next = remove_hit(&edges, v);
            if excluded.iter().any(|&x| x != 0) {
                for i in 0..next.len() {
                    for (a, b) in next.data[i * w..(i + 1) * w].iter_mut().zip(&excluded) {
                        *a &= !b;
                    }
                }
            }
            let mut c = chosen.clone();
            c[v / 64] |= 1 << (v % 64);
            if self.run(next, c, count + 1) {
                return true;
            }
            excluded[v / 64] |= 1 << (v % 64);
        }
        false
    }
}

fn remove_hit(edges: &Rows, v: usize) -> Rows {
    let w = edges.width;
    let mut data = Vec::with_capacity(edges.data.len());
    for i in 0..edges.len() {
        let r = edges.row(i);
        if !has_bit(r, v) {
            data.extend_from_slice(r);
        }
    }
    Rows { width: w, data }
}

/// Masks out every vertex whose edges all contain some other vertex too
/// (ties keep the smaller index). Any cover using such a vertex can swap
/// it for its dominator. Returns whether anything was masked.
fn drop_dominated(edges: &mut Rows) -> bool {
    let w = edges.width;
    let m = edges.len();
    let ew = m.div_ceil(64);
    let mut live = vec![0u64; w];
    for i in 0..m {
        for (l, x) in live.iter_mut().zip(edges.row(i)) {
            *l |= x;
        }
    }
    let verts: Vec<usize> = bits(&live).collect();
    let mut inc = vec![0u64; verts.len() * ew];
    for i in 0..m {
        let r = edges.row(i);
        for (k, &v) in verts.iter().enumerate() {
            if has_bit(r, v) {
                inc[k * ew + i / 64] |= 1 << (i % 64);
            }
        }
    }
    let row = |k: usize| &inc[k * ew..(k + 1) * ew];
    let mut dead = vec![0u64; w];
    let mut any = false;
    for a in 0..verts.len() {
        for b in 0..verts.len() {
            if a == b || has_bit(&dead, verts[b]) {
                continue;
            }
            let (ra, rb) = (row(a), row(b));
            if ra.iter().zip(rb).all(|(x, y)| x & !y == 0) && (ra != rb || b < a) {
                dead[verts[a] / 64] |= 1 << (verts[a] % 64);
                any = true;
                break;
            }
        }
    }
    if any {
        for i in 0..m {
            for (x, d) in edges.data[i * w..(i + 1) * w].iter_mut().zip(&dead) {
                *x &= !d;
            }
        }
    }
    any
}

/// Size of a greedy family of pairwise disjoint edges, smallest first.
fn packing_bound(edges: &Rows) -> usize {
    let mut idx: Vec<usize> = (0..edges.len()).collect();
    idx.sort_by_key(|&i| popcount(edges.row(i)));
    let mut used = vec![0u64; edges.width];
    let mut count = 0;
    for i in idx {
        let r = edges.row(i);
        if disjoint(r, &used) {
            for (u, x) in used.iter_mut().zip(r) {
                *u |= x;
            }
            count += 1;
        }
    }
    count
}

/// Edges of the clutter `c` as rows, with `included` vertices applied and `excluded`
/// vertices masked out.
fn prepare(c: &Hypergraph, included: &VertexSet, excluded: &VertexSet) -> (Rows, Vec<u64>, usize) {
    let width = c.n().div_ceil(64).max(1);
    let mut data = Vec::with_capacity(c.edges().len() * width);
    for e in c.edges() {
        if e.intersects(included) {
            continue;
        }
        let masked = e.difference(excluded);
        let mut row = vec![0u64; width];
        row[..masked.words().len()].copy_from_slice(masked.words());
        data.extend_from_slice(&row);
    }
    let mut chosen = vec![0u64; width];
    chosen[..included.words().len()].copy_from_slice(included.words());
    (Rows { width, data }, chosen, included.len())
}

fn search(
    c: &Hypergraph,
    included: &VertexSet,
    excluded: &VertexSet,
    limit: usize,
    stop_first: bool,
) -> Option<VertexSet> {
    if included.len() > limit {
        return None;
    }
    let (rows, chosen, count) = prepare(c, included, excluded);
    let mut s = Search {
        width: rows.width,
        limit,
        stop_first,
        best: None,
    };
    s.run(rows, chosen, count);
    s.best.map(|b| VertexSet::from_words(&b))
}

/// Greedy cover: repeatedly take the vertex hitting most uncovered edges.
fn greedy_cover(h: &Hypergraph) -> VertexSet {
    let mut uncovered: Vec<&VertexSet> = h.edges().iter().collect();
    let mut cover = VertexSet::new();
    while !uncovered.is_empty() {
        let v = (0..h.n())
            .max_by_key(|&v| {
                (
                    uncovered.iter().filter(|e| e.contains(v)).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty universe");
        cover.insert(v);
        uncovered.retain(|e| !e.contains(v));
    }
    cover
}

/// Some cover of size at most `budget`.
pub(crate) fn cover_within(h: &Hypergraph, budget: usize) -> Option<VertexSet> {
    if h.has_empty_edge() {
        return None;
    }
    search(
        &h.clutter(),
        &VertexSet::new(),
        &VertexSet::new(),
        budget,
        true,
    )
}

pub(crate) fn minimum_cover(h: &Hypergraph) -> CoverResult {
    if h.has_empty_edge() {
        return CoverResult::infeasible();
    }
    let c = h.clutter();
    let tau = optimum(&c).len();
    CoverResult::found(canonical_cover(&c, tau))
}

/// Some minimum cover, without the lexicographic canonicalization.
pub(crate) fn any_minimum_cover(h: &Hypergraph) -> CoverResult {
    if h.has_empty_edge() {
        return CoverResult::infeasible();
    }
    CoverResult::found(optimum(&h.clutter()))
}

fn optimum(c: &Hypergraph) -> VertexSet {
    let greedy = greedy_cover(c);
    match greedy.len() {
        0 => greedy,
        g => search(c, &VertexSet::new(), &VertexSet::new(), g - 1, false).unwrap_or(greedy),
    }
}

/// Lexicographically first cover of size `tau` of the clutter `h`,
/// assuming `tau` is the covering number.
fn canonical_cover(h: &Hypergraph, tau: usize) -> VertexSet {
    let mut chosen = VertexSet::new();
    let mut excluded = VertexSet::new();
    for v in 0..h.n() {
        if chosen.len() == tau {
            break;
        }
        let mut with_v = chosen.clone();
        with_v.insert(v);
        if search(h, &with_v, &excluded, tau, true).is_some() {
            chosen = with_v;
        } else {
            excluded.insert(v);
        }
    }
    debug_assert!(h.is_cover(&chosen));
    chosen
}
