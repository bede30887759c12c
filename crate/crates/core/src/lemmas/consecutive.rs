use std::collections::BTreeMap;

use crate::certificate::{Cycle, Path};
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::toolbox::{
    bfs_layering, maximal_path_avoiding, maximal_path_from, min_degree_core, BfsLayering, BipartiteSub, Side,
};

use super::efrs::LayerPaths;

#[derive(Debug, Clone)]
pub struct ConsecutivePathsResult {
    pub x: usize,
    pub y: usize,
    /// The partner of `y` on the edge inside `N'_m`.
    pub z: usize,
    pub m: usize,
    /// Certificates for `3..=|N_m| / k` (empty when not requested).
    pub cycles: BTreeMap<usize, Cycle>,
    /// `x`-`y` paths keyed by length; the keys form an interval from `m`.
    pub paths: BTreeMap<usize, Path>,
    /// `B'`, with `N'_m` as its `x` part.
    pub core: BipartiteSub,
    pub layering: BfsLayering,
}

impl ConsecutivePathsResult {
    /// Inclusive range of path lengths.
    pub fn window(&self) -> (usize, usize) {
        (self.m, *self.paths.keys().next_back().expect("paths are nonempty"))
    }
}

/// Cycles through the BFS layers of `b` from `x`, and `x`-`y` paths of
/// every length in a window starting at `m`.
pub fn consecutive_paths(g: &Graph, b: &BipartiteSub, x: usize, k: usize) -> Result<ConsecutivePathsResult> {
    consecutive_paths_with(g, b, x, k, true)
}

pub(crate) fn consecutive_paths_with(
    g: &Graph,
    b: &BipartiteSub,
    x: usize,
    k: usize,
    want_cycles: bool,
) -> Result<ConsecutivePathsResult> {
    let d = b.min_degree;
    if k == 0 || 2 * d <= 9 * k {
        return Err(Error::Precondition(format!(
            "consecutive paths need k >= 1 and d > 9k/2 (d = {d}, k = {k})"
        )));
    }
    let layering = bfs_layering(b, x)?;
    let m = layering.m;

    let mut cycles = BTreeMap::new();
    if want_cycles {
        for i in 1..=m {
            let top = layering.layer(i).len() / k;
            let lo = (2 * i + 1).max(3);
            if (lo..=top).all(|len| cycles.contains_key(&len)) {
                continue;
            }
            let paths = LayerPaths::new(g, &layering, i);
            for len in lo..=top {
                if cycles.contains_key(&len) {
                    continue;
                }
                match paths.cycle(len)? {
                    Some(c) => {
                        cycles.insert(len, c);
                    }
                    None => {
                        let ind = paths.coloring().independent;
                        if ind.len() <= k {
                            return Err(Error::internal(
                                "consecutive-paths",
                                format!("no {len}-cycle in layer {i} but colour classes are small"),
                            ));
                        }
                        return Err(Error::violation(
                            format!("consecutive-paths/layer-{i}/length-{len}"),
                            Witness::IndependentSet(ind),
                        ));
                    }
                }
            }
        }
        let top = layering.layer(m).len() / k;
        if let Some(gap) = (3..=top).find(|l| !cycles.contains_key(l)) {
            return Err(Error::internal(
                "consecutive-paths",
                format!("layers leave length {gap} uncovered"),
            ));
        }
    }

    // B': the 2d/9-core of the edges between N_m and N_{m+1}
    let dense = BipartiteSub::from_parts(&b.graph, layering.layer(m), layering.layer(m + 1))?;
    let threshold = (2 * d).div_ceil(9);
    let core = min_degree_core(&dense.graph, threshold);
    if core.is_empty() {
        return Err(Error::internal(
            "consecutive-paths",
            "the 2d/9-core between N_m and N_m+1 is empty",
        ));
    }
    let (low, high): (Vec<usize>, Vec<usize>) = core.iter().partition(|&&v| layering.depth[v] == m);
    let core = BipartiteSub::from_parts(&b.graph, &low, &high)?;

    let mut edge = None;
    'outer: for &y in &core.x {
        for &z in g.neighbors(y) {
            if z > y && core.side(z) == Some(Side::X) {
                edge = Some((y, z));
                break 'outer;
            }
        }
    }
    let Some((y, z)) = edge else {
        return Err(Error::violation(
            "consecutive-paths/edge-in-core",
            Witness::IndependentSet(core.x.clone()),
        ));
    };

    let tree_to = |w: usize| -> Vec<usize> {
        let mut p = layering.path_up(w, 0);
        p.reverse();
        p
    };
    let mut paths = BTreeMap::new();
    let from_y = maximal_path_from(&core.graph, y);
    for t in (0..=from_y.len()).step_by(2) {
        let mut verts = tree_to(from_y.verts[t]);
        verts.extend(from_y.verts[..t].iter().rev());
        paths.insert(m + t, Path::new(verts));
    }
    let from_z = maximal_path_avoiding(&core.graph, z, &[y]);
    for t in (0..=from_z.len()).step_by(2) {
        let mut verts = tree_to(from_z.verts[t]);
        verts.extend(from_z.verts[..t].iter().rev());
        verts.push(y);
        paths.insert(m + t + 1, Path::new(verts));
    }
    // keep the contiguous run from m
    let mut top = m;
    while paths.contains_key(&(top + 1)) {
        top += 1;
    }
    paths.retain(|&l, _| l <= top);
    if top < m + 2 * threshold - 2 {
        return Err(Error::internal(
            "consecutive-paths",
            format!("path window {m}..={top} shorter than 2d'-2 = {}", 2 * threshold - 2),
        ));
    }
    Ok(ConsecutivePathsResult {
        x,
        y,
        z,
        m,
        cycles,
        paths,
        core,
        layering,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify_cycle, verify_path};
    use crate::toolbox::bipartite_subgraph;

    fn check(g: &Graph, r: &ConsecutivePathsResult, k: usize) {
        let top = r.layering.layer(r.m).len() / k;
        assert_eq!(
            r.cycles.keys().copied().collect::<Vec<_>>(),
            (3..=top).collect::<Vec<_>>()
        );
        for (&len, c) in &r.cycles {
            assert_eq!(c.len(), len);
            verify_cycle(g, c).unwrap();
        }
        let (lo, hi) = r.window();
        assert_eq!(lo, r.m);
        assert_eq!(r.paths.len(), hi - lo + 1);
        for (&len, p) in &r.paths {
            assert_eq!(p.len(), len);
            assert_eq!((p.start(), p.end()), (r.x, r.y));
            verify_path(g, p).unwrap();
        }
        assert!(r.core.min_degree * 9 >= 2 * r.layering.d);
    }

    #[test]
    fn complement_of_c1001() {
        let g = Graph::cycle(1001).complement();
        let b = bipartite_subgraph(&g);
        let r = consecutive_paths(&g, &b, 0, 2).unwrap();
        check(&g, &r, 2);
        let d = b.min_degree;
        assert!(r.window().1 - r.m >= 4 * d / 9 - 2);
    }

    #[test]
    fn complete_graph_k40() {
        let g = Graph::complete(40);
        let b = bipartite_subgraph(&g);
        let r = consecutive_paths(&g, &b, 0, 1).unwrap();
        assert_eq!(r.m, 1);
        check(&g, &r, 1);
        assert_eq!(*r.cycles.keys().next_back().unwrap(), r.layering.layer(1).len());
    }

    #[test]
    fn rejects_low_degree() {
        let g = Graph::complete(12);
        let b = bipartite_subgraph(&g);
        assert!(matches!(consecutive_paths(&g, &b, 0, 2), Err(Error::Precondition(_))));
    }
}
