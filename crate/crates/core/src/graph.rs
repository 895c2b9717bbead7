//! Simple undirected graphs on the dense vertex set `0..n`.
//!
//! A [`Graph`] keeps sorted neighbour lists for every size and, for graphs
//! with at most [`BITSET_LIMIT`] vertices, one `u64` adjacency row per vertex.
//! The search kernels in this crate (pattern matching, exact colouring,
//! clique search) run on those rows; structural operations work at any size.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Largest vertex count served by the single-word bitset rows.
pub const BITSET_LIMIT: usize = 64;

#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<u64>,
    name: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// `adj` must already be symmetric, sorted, loop-free and duplicate-free.
    fn from_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        let rows = if n <= BITSET_LIMIT {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |row, &v| row | (1 << v)))
                .collect()
        } else {
            Vec::new()
        };
        Graph { adj, rows, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if !self.rows.is_empty() || self.adj.is_empty() {
            u < self.n() && v < self.n() && self.rows[u] >> v & 1 == 1
        } else {
            self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok())
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Δ(g); 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(g); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Adjacency rows as bitsets, available when `n <= 64`.
    pub fn bit_rows(&self) -> Result<&[u64]> {
        if self.n() <= BITSET_LIMIT {
            Ok(&self.rows)
        } else {
            Err(Error::TooLarge { n: self.n(), limit: BITSET_LIMIT })
        }
    }

    /// Bitset with every vertex set; requires `n <= 64`.
    pub fn full_mask(&self) -> u64 {
        full_mask(self.n())
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, list)| {
                let mut it = list.iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.next_if(|&&w| w < v).is_some() {}
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// `self` on vertices `0..n`, `other` shifted to `n..n+m`, no edges between them.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + offset).collect()));
        Graph::from_adjacency(adj)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n, m) = (self.n(), other.n());
        let mut adj = Vec::with_capacity(n + m);
        for list in &self.adj {
            adj.push(list.iter().copied().chain(n..n + m).collect());
        }
        for list in &other.adj {
            adj.push((0..n).chain(list.iter().map(|&v| v + n)).collect());
        }
        Graph::from_adjacency(adj)
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            position[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .map(|&w| position[w])
                    .filter(|&p| p != usize::MAX)
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Subgraph induced by the vertices in `mask`, listed in increasing order.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let vertices = mask_vertices(mask);
        self.induced_subgraph(&vertices).expect("mask within range")
    }

    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("no edge {u}-{v}")));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Graph::from_adjacency(adj))
    }

    /// Maximum over all induced subgraphs of the minimum degree, with the
    /// min-degree peeling order that witnesses it.
    pub fn degeneracy(&self) -> Degeneracy {
        let n = self.n();
        let mut degree = self.degrees();
        let mut removed = vec![false; n];
        let mut ordering = Vec::with_capacity(n);
        let mut value = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (degree[v], v))
                .expect("a vertex remains");
            value = value.max(degree[v]);
            removed[v] = true;
            ordering.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                }
            }
        }
        Degeneracy { value, ordering }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            s.field("name", name);
        }
        s.field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of min-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    pub value: usize,
    /// Vertices in the order they were peeled.
    pub ordering: Vec<usize>,
}

/// Non-increasing sequence of per-class degree caps `d_1 >= ... >= d_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBounds(Vec<usize>);

impl DegreeBounds {
    pub fn new(caps: Vec<usize>) -> Result<DegreeBounds> {
        if caps.is_empty() {
            return Err(Error::InvalidParameter("degree bounds need at least one class".into()));
        }
        if caps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "degree bounds must be non-increasing, got {caps:?}"
            )));
        }
        Ok(DegreeBounds(caps))
    }

    /// `k` copies of `cap`.
    pub fn uniform(k: usize, cap: usize) -> Result<DegreeBounds> {
        DegreeBounds::new(vec![cap; k])
    }

    pub fn classes(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}
