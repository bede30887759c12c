use crate::certificate::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::toolbox::{BfsLayering, NONE};

/// The colouring side of the layer dichotomy: `color[i]` is the length of
/// the longest increasing path starting at `order[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncreasingPathColoring {
    pub layer: usize,
    /// The layer in its left-to-right order.
    pub order: Vec<usize>,
    pub color: Vec<usize>,
    /// Largest colour class; independent in the host graph.
    pub independent: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EfrsOutcome {
    Cycle(Cycle),
    Coloring(IncreasingPathColoring),
}

/// Longest increasing paths inside one layer, computed once and reused for
/// every target length.
pub(crate) struct LayerPaths<'a> {
    layering: &'a BfsLayering,
    h: usize,
    /// Indexed by rank: longest increasing path length and its next step.
    best: Vec<usize>,
    next: Vec<usize>,
}

impl<'a> LayerPaths<'a> {
    pub fn new(g: &Graph, layering: &'a BfsLayering, h: usize) -> Self {
        let z = layering.layer(h);
        let mut best = vec![0; z.len()];
        let mut next = vec![NONE; z.len()];
        for r in (0..z.len()).rev() {
            for &w in g.neighbors(z[r]) {
                if layering.depth[w] != h {
                    continue;
                }
                let rw = layering.rank[w];
                // ties go to the leftmost continuation
                if rw > r && (best[rw] + 1 > best[r] || (best[rw] + 1 == best[r] && rw < next[r])) {
                    best[r] = best[rw] + 1;
                    next[r] = rw;
                }
            }
        }
        LayerPaths {
            layering,
            h,
            best,
            next,
        }
    }

    pub fn max_color(&self) -> usize {
        self.best.iter().copied().max().unwrap_or(0)
    }

    /// A cycle of length `len` from an increasing path of length `len - 2`,
    /// or `None` when no such path exists. Needs `2h < len`.
    pub fn cycle(&self, len: usize) -> Result<Option<Cycle>> {
        debug_assert!(2 * self.h < len);
        let Some(start) = self.best.iter().position(|&b| b >= len - 2) else {
            return Ok(None);
        };
        let t = self.layering;
        let z = t.layer(self.h);
        let mut path = Vec::with_capacity(len - 1);
        let mut r = start;
        path.push(z[r]);
        for _ in 0..len - 2 {
            r = self.next[r];
            path.push(z[r]);
        }
        let top = t.lca(path[0], path[len - 2]);
        let tree_len = 2 * (self.h - t.depth[top]);
        // drop ends, tail first, keeping the common ancestor of the ends
        let (mut a, mut b) = (0, len - 2);
        for _ in 0..tree_len - 2 {
            if t.lca(path[a], path[b - 1]) == top {
                b -= 1;
            } else if t.lca(path[a + 1], path[b]) == top {
                a += 1;
            } else {
                return Err(Error::internal("efrs", "neither end can be peeled"));
            }
        }
        let mut verts = path[a..=b].to_vec();
        let up = t.path_up(path[b], t.depth[top]);
        verts.extend(&up[1..]);
        let down = t.path_up(path[a], t.depth[top]);
        verts.extend(down[1..down.len() - 1].iter().rev());
        debug_assert_eq!(verts.len(), len);
        Ok(Some(Cycle::new(verts)))
    }

    pub fn coloring(&self) -> IncreasingPathColoring {
        let order = self.layering.layer(self.h).to_vec();
        let colors = self.max_color() + 1;
        let mut classes = vec![Vec::new(); colors];
        for (r, &c) in self.best.iter().enumerate() {
            classes[c].push(order[r]);
        }
        let mut independent = classes.into_iter().rev().max_by_key(|c| c.len()).unwrap_or_default();
        independent.sort_unstable();
        IncreasingPathColoring {
            layer: self.h,
            order,
            color: self.best.clone(),
            independent,
        }
    }
}

/// Either an `len`-cycle built from an increasing path in layer `h`, or the
/// increasing-path colouring of that layer with fewer than `len - 2` colours.
pub fn efrs_dichotomy(g: &Graph, layering: &BfsLayering, h: usize, len: usize) -> Result<EfrsOutcome> {
    if 2 * h >= len || len < 3 {
        return Err(Error::Precondition(format!(
            "need 2h < len and len >= 3 (h = {h}, len = {len})"
        )));
    }
    if layering.layer(h).is_empty() {
        return Err(Error::Precondition(format!("layer {h} is empty")));
    }
    let paths = LayerPaths::new(g, layering, h);
    Ok(match paths.cycle(len)? {
        Some(c) => EfrsOutcome::Cycle(c),
        None => EfrsOutcome::Coloring(paths.coloring()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_cycle;
    use crate::toolbox::{bfs_layering, bipartite_subgraph, BipartiteSub};

    fn check(g: &Graph, out: &EfrsOutcome, len: usize) {
        match out {
            EfrsOutcome::Cycle(c) => {
                assert_eq!(c.len(), len);
                verify_cycle(g, c).unwrap();
            }
            EfrsOutcome::Coloring(col) => {
                assert!(col.color.iter().all(|&c| c + 3 <= len));
                for (i, &u) in col.order.iter().enumerate() {
                    for (j, &v) in col.order.iter().enumerate() {
                        if i != j && g.has_edge(u, v) {
                            assert_ne!(col.color[i], col.color[j]);
                        }
                    }
                }
                for (i, &u) in col.independent.iter().enumerate() {
                    for &v in &col.independent[i + 1..] {
                        assert!(!g.has_edge(u, v));
                    }
                }
                assert!(col.independent.len() * (len - 2) >= col.order.len());
            }
        }
    }

    /// A layering over a hand-built tree, bypassing the density search.
    fn layering_of_tree(n: usize, parent: &[usize]) -> BfsLayering {
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![NONE; n];
        depth[0] = 0;
        for v in 1..n {
            children[parent[v]].push(v);
        }
        let mut layers: Vec<Vec<usize>> = Vec::new();
        let mut rank = vec![NONE; n];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if v != 0 {
                depth[v] = depth[parent[v]] + 1;
            }
            if layers.len() <= depth[v] {
                layers.push(Vec::new());
            }
            rank[v] = layers[depth[v]].len();
            layers[depth[v]].push(v);
            stack.extend(children[v].iter().rev());
        }
        let mut par = vec![NONE; n];
        par[1..n].copy_from_slice(&parent[1..n]);
        BfsLayering {
            root: 0,
            parent: par,
            depth,
            children,
            layers,
            rank,
            d: 0,
            m: 0,
        }
    }

    #[test]
    fn c8_has_no_5_cycle() {
        // C8 from 0: layers {0}, {1,7}, {2,6}, {3,5}, {4}
        let g = Graph::cycle(8);
        let parent = [NONE, 0, 1, 2, 3, 6, 7, 0];
        let l = layering_of_tree(8, &parent);
        assert_eq!(l.layer(2), &[2, 6]);
        let out = efrs_dichotomy(&g, &l, 2, 5).unwrap();
        assert!(matches!(out, EfrsOutcome::Coloring(_)));
        check(&g, &out, 5);
    }

    #[test]
    fn k66_layer_colors_with_zero() {
        let g = Graph::complete_bipartite(6, 6);
        let b = BipartiteSub::from_parts(&g, &[0, 1, 2, 3, 4, 5], &[6, 7, 8, 9, 10, 11]).unwrap();
        let l = bfs_layering(&b, 0).unwrap();
        let out = efrs_dichotomy(&g, &l, 1, 4).unwrap();
        // N_1 of K66 is one whole side, so no increasing edges exist
        check(&g, &out, 4);
        let EfrsOutcome::Coloring(c) = out else { panic!() };
        assert!(c.color.iter().all(|&x| x == 0));
    }

    #[test]
    fn dense_layers_give_cycles() {
        let g = Graph::cycle(201).complement();
        let b = bipartite_subgraph(&g);
        let l = bfs_layering(&b, 0).unwrap();
        for h in 1..=l.m {
            let paths = LayerPaths::new(&g, &l, h);
            for len in 2 * h + 1..=l.layer(h).len() / 2 {
                let c = paths.cycle(len).unwrap().expect("alpha 2 forces long increasing paths");
                assert_eq!(c.len(), len);
                verify_cycle(&g, &c).unwrap();
            }
        }
    }

    #[test]
    fn peeling_matches_plane_order() {
        // root 0; children 1, 2; grandchildren 3, 4 under 1 and 5, 6 under 2;
        // layer-2 path 3 - 4 - 5 - 6 closes through the root
        let parent = [NONE, 0, 0, 1, 1, 2, 2];
        let l = layering_of_tree(7, &parent);
        let mut edges = vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)];
        edges.extend([(3, 4), (4, 5), (5, 6)]);
        let g = Graph::from_edges(7, edges).unwrap();
        let out = efrs_dichotomy(&g, &l, 2, 5).unwrap();
        check(&g, &out, 5);
        let EfrsOutcome::Cycle(c) = out else { panic!() };
        assert_eq!(c.verts, vec![4, 5, 2, 0, 1]);
        // the longest increasing path has length 3, too short for 6
        let out = efrs_dichotomy(&g, &l, 2, 6).unwrap();
        check(&g, &out, 6);
        assert!(matches!(out, EfrsOutcome::Coloring(_)));
        assert!(efrs_dichotomy(&g, &l, 2, 4).is_err());
    }
}
