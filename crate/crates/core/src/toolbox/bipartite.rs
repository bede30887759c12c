use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// A bipartite subgraph of a host graph, kept on host ids. Vertices outside
/// `x` and `y` are isolated in `graph`.
#[derive(Debug, Clone)]
pub struct BipartiteSub {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// Exactly the host edges between `x` and `y`.
    pub graph: Graph,
    /// Minimum cross-degree over `x` and `y` (0 when both are empty).
    pub min_degree: usize,
    side: Vec<Option<Side>>,
}

impl BipartiteSub {
    /// The subgraph of `host` formed by all edges between `x` and `y`.
    pub fn from_parts(host: &Graph, x: &[usize], y: &[usize]) -> Result<Self> {
        let n = host.n();
        let mut side = vec![None; n];
        for (part, s) in [(x, Side::X), (y, Side::Y)] {
            for &v in part {
                if v >= n {
                    return Err(Error::Input(format!("vertex {v} out of range")));
                }
                if side[v].is_some() {
                    return Err(Error::Input(format!("vertex {v} listed twice")));
                }
                side[v] = Some(s);
            }
        }
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| match side[v] {
                None => Vec::new(),
                Some(s) => host
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| matches!(side[u], Some(t) if t != s))
                    .collect(),
            })
            .collect();
        let mut xs = x.to_vec();
        let mut ys = y.to_vec();
        xs.sort_unstable();
        ys.sort_unstable();
        let min_degree = xs.iter().chain(&ys).map(|&v| adj[v].len()).min().unwrap_or(0);
        Ok(BipartiteSub {
            x: xs,
            y: ys,
            graph: Graph::from_sorted_adjacency(adj),
            min_degree,
            side,
        })
    }

    pub fn side(&self, v: usize) -> Option<Side> {
        self.side.get(v).copied().flatten()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.side(v).is_some()
    }

    pub fn cross_degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    /// All vertices of both parts, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.x.iter().chain(&self.y).copied().collect();
        all.sort_unstable();
        all
    }

    /// Number of cross edges.
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// Local-search max cut over all of `g`: start from the even/odd id split
/// and move any vertex with more neighbours on its own side than across.
/// Every vertex ends with cross-degree at least half its degree.
pub fn bipartite_subgraph(g: &Graph) -> BipartiteSub {
    let n = g.n();
    let mut in_y: Vec<bool> = (0..n).map(|v| v % 2 == 1).collect();
    let mut same: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&u| in_y[u] == in_y[v]).count())
        .collect();
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        if 2 * same[v] <= g.degree(v) {
            continue;
        }
        // moving v turns its same-side neighbours into cross ones
        let old = in_y[v];
        in_y[v] = !old;
        same[v] = g.degree(v) - same[v];
        for &u in g.neighbors(v) {
            if in_y[u] == old {
                same[u] -= 1;
            } else {
                same[u] += 1;
                if 2 * same[u] > g.degree(u) && !queued[u] {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let x: Vec<usize> = (0..n).filter(|&v| !in_y[v]).collect();
    let y: Vec<usize> = (0..n).filter(|&v| in_y[v]).collect();
    BipartiteSub::from_parts(g, &x, &y).expect("parts are disjoint and in range")
}
