//! Simple undirected graphs on dense vertex ids `0..n`.

use std::fmt;

use crate::error::{Error, Result};

/// Graphs up to this many vertices also keep a packed adjacency matrix so
/// that edge queries are a single bit test.
const MATRIX_LIMIT: usize = 8192;

/// An immutable simple undirected graph.
///
/// Neighbour lists are sorted and duplicate-free; the adjacency relation is
/// symmetric and irreflexive.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    matrix: Option<Vec<u64>>,
    edges: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.edges)
            .field("adj", &self.adj)
            .finish()
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Self::from_sorted_adjacency(adj)
    }

    /// The cycle `C_n` with edges `i, i+1 (mod n)`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Self::from_edges(n, edges).expect("cycle edges are valid")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i));
        Self::from_edges(n, edges).expect("path edges are valid")
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("bipartite edges are valid")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i - i+5`, inner
    /// pentagram on `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).expect("petersen edges are valid")
    }

    /// Build a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Caller guarantees the lists are sorted, duplicate-free, symmetric and
    /// loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let matrix = (n <= MATRIX_LIMIT && n > 0).then(|| {
            let words = (n * n).div_ceil(64);
            let mut bits = vec![0u64; words];
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    let idx = u * n + v;
                    bits[idx / 64] |= 1 << (idx % 64);
                }
            }
            bits
        });
        Graph { adj, matrix, edges }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.n();
        if u >= n || v >= n {
            return false;
        }
        match &self.matrix {
            Some(bits) => {
                let idx = u * n + v;
                bits[idx / 64] >> (idx % 64) & 1 == 1
            }
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Minimum degree; `0` for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n == 0 || self.edges == n * (n - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut out = Vec::with_capacity(n - 1 - self.degree(v));
                let mut it = self.adj[v].iter().peekable();
                for u in 0..n {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// The subgraph induced by `set`. Local ids follow the order of `set`
    /// after sorting, so `to_host` is increasing.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<Subgraph> {
        let n = self.n();
        let mut verts = set.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&bad) = verts.iter().find(|&&v| v >= n) {
            return Err(Error::Input(format!("vertex {bad} out of range for {n} vertices")));
        }
        let mut to_local = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            to_local[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (to_local[u] != usize::MAX).then_some(to_local[u]))
                    .collect()
            })
            .collect();
        Ok(Subgraph {
            graph: Graph::from_sorted_adjacency(adj),
            to_host: verts,
            to_local,
        })
    }
}

/// An induced subgraph together with its id translation.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    to_host: Vec<usize>,
    to_local: Vec<usize>,
}

impl Subgraph {
    pub fn host_id(&self, local: usize) -> usize {
        self.to_host[local]
    }

    pub fn local_id(&self, host: usize) -> Option<usize> {
        self.to_local.get(host).copied().filter(|&l| l != usize::MAX)
    }

    /// Host ids of the subgraph's vertices, ascending.
    pub fn host_vertices(&self) -> &[usize] {
        &self.to_host
    }

    pub fn lift(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.to_host[v]).collect()
    }

    /// Translate host ids into local ids; `None` if any id is missing.
    pub fn lower(&self, host: &[usize]) -> Option<Vec<usize>> {
        host.iter().map(|&v| self.local_id(v)).collect()
    }
}
