use crate::error::{Error, Result};

use super::bipartite::BipartiteSub;

pub(crate) const NONE: usize = usize::MAX;

/// A breadth-first search tree in a bipartite subgraph, with its distance
/// layers and the density index `m`.
///
/// Each vertex's parent is its lowest-id neighbour in the previous layer and
/// children are kept in ascending id. Layers list their vertices in the
/// preorder of a depth-first walk of that ordered tree, which fixes the
/// left-to-right order used for increasing paths.
#[derive(Debug, Clone)]
pub struct BfsLayering {
    pub root: usize,
    /// Parent in the tree, `usize::MAX` for the root and unreached vertices.
    pub parent: Vec<usize>,
    /// Depth in the tree, `usize::MAX` for unreached vertices.
    pub depth: Vec<usize>,
    pub children: Vec<Vec<usize>>,
    pub layers: Vec<Vec<usize>>,
    /// Rank of each vertex within its layer order.
    pub rank: Vec<usize>,
    /// Minimum cross-degree of the bipartite host.
    pub d: usize,
    pub m: usize,
}

impl BfsLayering {
    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }

    /// Edges of the bipartite host between layers `i` and `i + 1`.
    pub fn edges_between(&self, b: &BipartiteSub, i: usize) -> usize {
        self.layer(i + 1)
            .iter()
            .map(|&v| b.graph.neighbors(v).iter().filter(|&&u| self.depth[u] == i).count())
            .sum()
    }

    /// Whether layers `i, i+1` meet `e >= (2d/9)(|N_i| + |N_{i+1}|)`.
    pub fn is_dense(&self, b: &BipartiteSub, i: usize) -> bool {
        9 * self.edges_between(b, i) >= 2 * self.d * (self.layer(i).len() + self.layer(i + 1).len())
    }

    /// Tree path from `v` up to its ancestor at depth `to_depth`, inclusive.
    pub fn path_up(&self, v: usize, to_depth: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while self.depth[cur] > to_depth {
            cur = self.parent[cur];
            out.push(cur);
        }
        out
    }

    pub fn ancestor(&self, v: usize, at_depth: usize) -> usize {
        let mut cur = v;
        while self.depth[cur] > at_depth {
            cur = self.parent[cur];
        }
        cur
    }

    /// Lowest common ancestor of two vertices in the same layer.
    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut a, mut b) = (u, v);
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
        }
        a
    }
}

/// Build the layering of `b` from `x`.
pub fn bfs_layering(b: &BipartiteSub, x: usize) -> Result<BfsLayering> {
    if !b.contains(x) {
        return Err(Error::Precondition(format!(
            "root {x} is not in the bipartite subgraph"
        )));
    }
    if b.min_degree < 5 {
        return Err(Error::Precondition(format!(
            "layering needs minimum cross-degree d >= 5, got {}",
            b.min_degree
        )));
    }
    let n = b.graph.n();
    let g = &b.graph;
    let mut depth = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut children = vec![Vec::new(); n];
    depth[x] = 0;
    let mut frontier = vec![x];
    let mut bfs_layers = vec![vec![x]];
    while !frontier.is_empty() {
        let i = bfs_layers.len();
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if depth[w] == NONE {
                    depth[w] = i;
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        for &w in &next {
            let p = *g
                .neighbors(w)
                .iter()
                .find(|&&u| depth[u] == i - 1)
                .expect("discovered from the previous layer");
            parent[w] = p;
            children[p].push(w);
        }
        if next.is_empty() {
            break;
        }
        bfs_layers.push(next.clone());
        frontier = next;
    }
    // children were pushed in ascending id already
    let mut layers = vec![Vec::new(); bfs_layers.len()];
    let mut rank = vec![NONE; n];
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        let l = &mut layers[depth[v]];
        rank[v] = l.len();
        l.push(v);
        stack.extend(children[v].iter().rev());
    }
    let mut out = BfsLayering {
        root: x,
        parent,
        depth,
        children,
        layers,
        rank,
        d: b.min_degree,
        m: 0,
    };
    out.m = (0..out.layers.len())
        .find(|&i| out.is_dense(b, i))
        .ok_or_else(|| Error::internal("bfs", "component exhausted before the density condition held"))?;
    if out.m == 0 {
        return Err(Error::internal("bfs", "density condition at m = 0 despite d >= 5"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::toolbox::bipartite_subgraph;

    fn check_invariants(b: &BipartiteSub, l: &BfsLayering) {
        for (i, layer) in l.layers.iter().enumerate() {
            for (r, &v) in layer.iter().enumerate() {
                assert_eq!(l.depth[v], i);
                assert_eq!(l.rank[v], r);
                for &u in b.graph.neighbors(v) {
                    assert_eq!(l.depth[u].abs_diff(i), 1, "edge {v}-{u} inside or skipping layers");
                }
                if i > 0 {
                    assert!(b.graph.has_edge(v, l.parent[v]));
                }
            }
        }
        assert!(l.m >= 1);
        assert!(l.is_dense(b, l.m));
        for i in 0..l.m {
            assert!(!l.is_dense(b, i));
            assert!(l.layer(i + 1).len() >= 2 * l.layer(i).len());
        }
        // m <= log2((n + d - 1) / d)
        let n = b.vertices().len() as f64;
        let d = l.d as f64;
        assert!((l.m as f64) <= ((n + d - 1.0) / d).log2() + 1e-9);
    }

    #[test]
    fn complete_bipartite_k66() {
        let g = Graph::complete_bipartite(6, 6);
        let b = BipartiteSub::from_parts(&g, &[0, 1, 2, 3, 4, 5], &[6, 7, 8, 9, 10, 11]).unwrap();
        for x in [0, 7] {
            let l = bfs_layering(&b, x).unwrap();
            assert_eq!(l.m, 1);
            assert_eq!(l.layer(1).len(), 6);
            assert_eq!(l.edges_between(&b, 0), 6);
            assert_eq!(l.edges_between(&b, 1), 30);
            check_invariants(&b, &l);
        }
    }

    #[test]
    fn layer_order_follows_tree() {
        let g = Graph::cycle(101).complement();
        let b = bipartite_subgraph(&g);
        let l = bfs_layering(&b, 0).unwrap();
        check_invariants(&b, &l);
        // siblings are contiguous and ascending in the layer order
        for v in 0..g.n() {
            let ranks: Vec<usize> = l.children[v].iter().map(|&c| l.rank[c]).collect();
            assert!(ranks.windows(2).all(|w| w[1] == w[0] + 1));
        }
    }

    #[test]
    fn rejects_small_degree() {
        let g = Graph::cycle(8);
        let b = bipartite_subgraph(&g);
        assert!(matches!(bfs_layering(&b, 0), Err(Error::Precondition(_))));
    }
}
