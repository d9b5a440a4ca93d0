//! Simple undirected graphs, exact BFS distance matrices, and the
//! interval / slice / ball primitives everything else is built on.
//!
//! Vertices are `0..n`. Graphs are immutable after construction and safe to
//! share across threads; the distance matrix is a dense row-major `n x n`
//! table of hop counts, which keeps the quadruple loops downstream at O(1)
//! per lookup.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A finite, simple, undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are deduplicated and stored
    /// symmetrically; self-loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as normalized pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertices adjacent to both `u` and `v`, by merging sorted lists.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// BFS hop distances from `src`; `u32::MAX` marks unreachable vertices.
    pub fn bfs(&self, src: Vertex) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &v in &self.adj[u] {
                if dist[v] == u32::MAX {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        !self.bfs(0).contains(&u32::MAX)
    }
}

/// Dense all-pairs shortest-path table over a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// BFS from every vertex, in parallel. Rejects disconnected graphs with
    /// a witness pair so callers can report exactly which vertices fail.
    pub fn build(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.n();
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| g.bfs(s)).collect();
        let mut d = Vec::with_capacity(n * n);
        for (u, row) in rows.into_iter().enumerate() {
            if let Some(v) = row.iter().position(|&x| x == u32::MAX) {
                return Err(Error::Disconnected { u, v });
            }
            d.extend_from_slice(&row);
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline(always)]
    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: Vertex) -> u32 {
        *self.row(u).iter().max().expect("n >= 1")
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|u| self.eccentricity(u)).max().expect("n >= 1")
    }

    /// True iff `p` lies on some shortest path from `u` to `v`.
    #[inline(always)]
    pub fn in_interval(&self, u: Vertex, v: Vertex, p: Vertex) -> bool {
        self.dist(u, p) + self.dist(p, v) == self.dist(u, v)
    }

    /// The interval `I(u, v)`: all vertices on at least one u-v geodesic.
    pub fn interval(&self, u: Vertex, v: Vertex) -> VertexSet {
        let mut set = VertexSet::new(self.n);
        for p in 0..self.n {
            if self.in_interval(u, v, p) {
                set.insert(p);
            }
        }
        set
    }

    /// The slice `S_k(u, v)`: interval vertices at distance `k` from `u`.
    pub fn slice(&self, u: Vertex, v: Vertex, k: u32) -> Result<VertexSet> {
        let d = self.dist(u, v);
        if k > d {
            return Err(Error::SliceOutOfRange { k, dist: d });
        }
        let mut set = VertexSet::new(self.n);
        for p in 0..self.n {
            if self.dist(u, p) == k && self.dist(p, v) == d - k {
                set.insert(p);
            }
        }
        Ok(set)
    }

    /// The closed ball `B(c, r)`.
    pub fn ball(&self, c: Vertex, r: u32) -> VertexSet {
        let mut set = VertexSet::new(self.n);
        for (p, &dcp) in self.row(c).iter().enumerate() {
            if dcp <= r {
                set.insert(p);
            }
        }
        set
    }
}

/// Dense bitset over the vertex range of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn insert(&mut self, v: Vertex) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline(always)]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    /// Collects vertices into a set sized to fit the largest element.
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> VertexSet {
        let items: Vec<Vertex> = iter.into_iter().collect();
        let n = items.iter().map(|&v| v + 1).max().unwrap_or(0);
        let mut s = VertexSet::new(n);
        for v in items {
            s.insert(v);
        }
        s
    }
}
