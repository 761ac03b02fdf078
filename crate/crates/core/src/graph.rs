//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense integers `0..n`. The adjacency of each vertex is a
//! `u64` bitset, which keeps every operation in this crate (colorings,
//! partition searches, clique bounds) branch-cheap at the orders the exact
//! solvers target. Graphs are immutable values: mutating operations such as
//! [`Graph::complement`] or [`Graph::delete_edges`] return new graphs.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Hard cap on the order of a [`Graph`]; one bitset word per vertex.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("vertex {0} listed twice in selection")]
    DuplicateVertex(usize),
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

/// An unordered pair of distinct vertices, stored with the smaller first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "a loop is not an edge");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// Endpoints as `(min, max)`.
    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(serializer)
    }
}

/// A set of edges, ordered by `(min endpoint, max endpoint)`.
///
/// The derived `Ord` compares element-wise in that order, which is exactly
/// the tie-breaking rule the stability solver uses to pick a reproducible
/// witness among equally small deleted-edge sets.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet::default()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Edges in ascending `(u, v)` order.
    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> EdgeSet {
        EdgeSet(iter.into_iter().collect())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for e in &self.0 {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// A simple undirected graph with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics above [`MAX_VERTICES`];
    /// callers taking untrusted orders validate first.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![0; n],
        }
    }

    /// Builds a graph from an edge list; duplicate edges are fine, loops and
    /// out-of-range endpoints are not.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            assert_ne!(a, b, "a loop is not an edge");
            g.add_edge_mut(a, b);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_mut(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.adj[a] & (1 << b) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor bitset of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices().flat_map(move |u| {
            BitIter(self.adj[u] & !((1 << (u + 1)) - 1)).map(move |v| Edge::new(u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = mask_below(self.n);
        let adj = self
            .vertices()
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Removes the edges in `f`. Asking to remove a non-edge is an error so
    /// that oracle code cannot silently no-op.
    pub fn delete_edges(&self, f: &EdgeSet) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for e in f.iter() {
            let (u, v) = e.endpoints();
            if !self.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(e));
            }
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
        }
        Ok(g)
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let mut f = EdgeSet::new();
        f.insert(e);
        self.delete_edges(&f)
    }

    /// Subgraph induced by `verts`, relabeled `0..verts.len()` preserving the
    /// given relative order.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = 0u64;
        for &v in verts {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
            if seen & (1 << v) != 0 {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge_mut(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `Some(k)` iff every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degs = self.vertices().map(|v| self.degree(v));
        let k = degs.next().unwrap_or(0);
        degs.all(|d| d == k).then_some(k)
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut unseen = mask_below(self.n);
        let mut comps = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= frontier;
            }
            unseen &= !comp;
            comps.push(BitIter(comp).collect());
        }
        comps
    }

    /// Vacuously true for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![2u8; self.n];
        for start in self.vertices() {
            if side[start] != 2 {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if side[w] == 2 {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, `None` for forests.
    ///
    /// BFS from every root; a non-tree edge `(u, w)` seen from root `r`
    /// closes a walk of length `d(u) + d(w) + 1`, which always contains a
    /// cycle no longer than itself, and the true girth is achieved once the
    /// root lies on a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in self.vertices() {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Exact clique number by branch and bound; fine up to n ~ 32.
    pub fn clique_number(&self) -> usize {
        fn expand(adj: &[u64], size: usize, mut cands: u64, best: &mut usize) {
            *best = (*best).max(size);
            while cands != 0 {
                if size + cands.count_ones() as usize <= *best {
                    return;
                }
                let v = cands.trailing_zeros() as usize;
                cands &= !(1 << v);
                expand(adj, size + 1, cands & adj[v], best);
            }
        }
        let mut best = 0;
        expand(&self.adj, 0, mask_below(self.n), &mut best);
        best
    }

    /// Per-vertex triangle counts (number of edges inside each open
    /// neighborhood).
    pub(crate) fn triangle_counts(&self) -> Vec<usize> {
        self.vertices()
            .map(|v| {
                self.neighbors(v)
                    .map(|u| (self.adj[u] & self.adj[v]).count_ones() as usize)
                    .sum::<usize>()
                    / 2
            })
            .collect()
    }

    /// Brute-force isomorphism test: backtracking vertex matcher with
    /// degree/triangle pruning. Intended for test-scale orders (n <= ~12).
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.size() != other.size() {
            return false;
        }
        let n = self.n;
        if n == 0 {
            return true;
        }
        let key = |g: &Graph, t: &[usize]| {
            let mut ks: Vec<(usize, usize)> =
                g.vertices().map(|v| (g.degree(v), t[v])).collect();
            ks.sort_unstable();
            ks
        };
        let ta = self.triangle_counts();
        let tb = other.triangle_counts();
        if key(self, &ta) != key(other, &tb) {
            return false;
        }

        // Match vertices of `self` in a connectivity-first order so the
        // adjacency constraints bite early.
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed = 0u64;
        while order.len() < n {
            let next = self
                .vertices()
                .filter(|&v| placed & (1 << v) == 0)
                .max_by_key(|&v| ((self.adj[v] & placed).count_ones(), self.degree(v)))
                .unwrap();
            placed |= 1 << next;
            order.push(next);
        }

        fn go(
            a: &Graph,
            b: &Graph,
            ta: &[usize],
            tb: &[usize],
            order: &[usize],
            pos: usize,
            map: &mut [usize],
            used: u64,
        ) -> bool {
            if pos == order.len() {
                return true;
            }
            let av = order[pos];
            for bv in b.vertices() {
                if used & (1 << bv) != 0
                    || a.degree(av) != b.degree(bv)
                    || ta[av] != tb[bv]
                {
                    continue;
                }
                let ok = order[..pos].iter().all(|&au| {
                    a.has_edge(av, au) == b.has_edge(bv, map[au])
                });
                if ok {
                    map[av] = bv;
                    if go(a, b, ta, tb, order, pos + 1, map, used | (1 << bv)) {
                        return true;
                    }
                }
            }
            false
        }
        let mut map = vec![usize::MAX; n];
        go(self, other, &ta, &tb, &order, 0, &mut map, 0)
    }

    /// Upper-triangle bitmask in column-major order: pair `(i, j)`, `i < j`,
    /// sits at index `C(j,2) + i`, with index 0 at the most significant bit
    /// so that integer order equals lexicographic bit-string order.
    /// Requires n <= 11 (55 pair bits).
    pub(crate) fn triangle_mask(&self) -> u64 {
        debug_assert!(self.n <= 11);
        let mut mask = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= tri_bit(i, j);
                }
            }
        }
        mask
    }

    pub(crate) fn from_triangle_mask(n: usize, mask: u64) -> Graph {
        debug_assert!(n <= 11);
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if mask & tri_bit(i, j) != 0 {
                    g.add_edge_mut(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn tri_bit(i: usize, j: usize) -> u64 {
    debug_assert!(i < j);
    1u64 << (63 - (j * (j - 1) / 2 + i))
}

/// Iterator over the set bits of a mask, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}
