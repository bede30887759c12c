use std::collections::BTreeMap;

use crate::certificate::{verify_cycle, Cycle, Path};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::toolbox::{bipartite_subgraph, bounded_core, shorten_path};

use super::consecutive::consecutive_paths_with;

/// Cycles through a Hamiltonian part `A` and a dense part `B`.
#[derive(Debug, Clone)]
pub struct BridgeCycles {
    /// Certificates keyed by length, covering `range`.
    pub cycles: BTreeMap<usize, Cycle>,
    pub range: (usize, usize),
    /// The dense core `H` inside `B`.
    pub core: Vec<usize>,
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
    pub m: usize,
}

/// `floor(log2(v))` for `v >= 1`.
pub(crate) fn floor_log2(v: usize) -> usize {
    (usize::BITS - 1 - v.leading_zeros()) as usize
}

/// Lowest cycle length the bridge construction reaches.
pub fn bridge_lower_bound(k: usize) -> usize {
    2 * k + 1 + floor_log2(2 * k + 1)
}

/// Cycles of every length in `[2k + 1 + floor(log2(2k+1)), |A| / 2]`, where
/// `A = V(c_a)` and `b_set` is disjoint from it.
///
/// A core `H` of `G[B]` supplies `x`-`y` paths of consecutive lengths; the
/// longer arc of `c_a` between anchors `a ~ x` and `b ~ y` is shortened to
/// fit each target length.
pub fn bridge_cycles(g: &Graph, c_a: &Cycle, b_set: &[usize], k: usize) -> Result<BridgeCycles> {
    verify_cycle(g, c_a).map_err(|e| Error::Precondition(format!("cycle on A does not verify: {e}")))?;
    let n = g.n();
    let mut in_a = vec![false; n];
    for &v in &c_a.verts {
        in_a[v] = true;
    }
    let mut bs = b_set.to_vec();
    bs.sort_unstable();
    bs.dedup();
    if let Some(&v) = bs.iter().find(|&&v| v >= n || in_a[v]) {
        return Err(Error::Precondition(format!(
            "vertex {v} of B is out of range or on the cycle"
        )));
    }
    let a_neighbors = |v: usize| g.neighbors(v).iter().copied().filter(|&u| in_a[u]);
    if let Some(&v) = bs.iter().find(|&&v| a_neighbors(v).count() < 2) {
        return Err(Error::Precondition(format!(
            "vertex {v} of B has fewer than 2 neighbours in A"
        )));
    }
    let d = 9 * k + 1;
    let bound = d * k + 1;
    let core = if bs.len() <= bound {
        let sub = g.induced_subgraph(&bs)?;
        if bs.is_empty() || sub.graph.min_degree() < d {
            return Err(Error::Precondition(format!(
                "B has {} <= (9k+1)k+1 vertices but G[B] has minimum degree below 9k+1 = {d}",
                bs.len()
            )));
        }
        bs
    } else {
        let sub = g.induced_subgraph(&bs)?;
        sub.lift(&bounded_core(&sub.graph, d, k).map_err(|e| e.in_stage("bridge"))?)
    };
    let h = g.induced_subgraph(&core)?;
    let hb = bipartite_subgraph(&h.graph);
    let r = consecutive_paths_with(&h.graph, &hb, 0, k, false).map_err(|e| e.in_stage("bridge"))?;
    let x = h.host_id(r.x);
    let y = h.host_id(r.y);
    let lift = |p: &Path| Path::new(h.lift(&p.verts));

    let a = a_neighbors(x).next().expect("checked above");
    let b = a_neighbors(y).find(|&u| u != a).expect("checked above");
    let pos = |v: usize| c_a.verts.iter().position(|&u| u == v).expect("anchor on the cycle");
    let arc = c_a.longer_arc(pos(a), pos(b));

    let lo = bridge_lower_bound(k);
    let hi = c_a.len() / 2;
    let paths: BTreeMap<usize, Path> = r.paths.iter().map(|(&l, p)| (l, lift(p))).collect();
    let cycles = close_through_paths(g, arc, k, lo, hi, &paths).map_err(|e| e.in_stage("bridge"))?;
    Ok(BridgeCycles {
        cycles,
        range: (lo, hi),
        core,
        x,
        y,
        a,
        b,
        m: r.m,
    })
}

/// Cycles of every length in `lo..=hi`, each the shortened `arc` (from `a`
/// to `b`) followed by a reversed path from `paths`. Every path runs from a
/// neighbour of `a` to a neighbour of `b`, avoids the arc, and the keys form
/// an interval at least `2k - 2` wide.
///
/// Lengths are processed downwards so each shortening starts from the
/// previous one.
pub(crate) fn close_through_paths(
    g: &Graph,
    arc: Path,
    k: usize,
    lo: usize,
    hi: usize,
    paths: &BTreeMap<usize, Path>,
) -> Result<BTreeMap<usize, Cycle>> {
    let (Some(&low), Some(&top)) = (paths.keys().next(), paths.keys().next_back()) else {
        return Err(Error::internal("close", "no closing paths"));
    };
    let mut cycles = BTreeMap::new();
    let mut cur = arc;
    for len in (lo..=hi).rev() {
        let q = len.saturating_sub(low + 2 * k);
        if q < 1 || q > cur.len() {
            return Err(Error::internal(
                "close",
                format!(
                    "q = {q} out of range at length {len} (arc {}, paths from {low})",
                    cur.len()
                ),
            ));
        }
        cur = shorten_path(g, &cur, q, k)?;
        let rest = len - 2 - cur.len();
        let Some(p) = paths.get(&rest) else {
            return Err(Error::internal(
                "close",
                format!("needs a closing path of length {rest}, window is {low}..={top}"),
            ));
        };
        let mut verts = cur.verts.clone();
        verts.extend(p.verts.iter().rev());
        cycles.insert(len, Cycle::new(verts));
    }
    Ok(cycles)
}
