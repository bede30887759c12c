use std::collections::VecDeque;

use crate::error::{Error, Result, Witness};
use crate::graph::Graph;

/// Peel `within` (ascending order) by repeatedly deleting a vertex of degree
/// below `d`. Returns the deletion order and the survivors, both as host ids.
fn peel(g: &Graph, within: &[usize], d: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut alive = vec![false; n];
    for &v in within {
        alive[v] = true;
    }
    let mut deg = vec![0usize; n];
    for &v in within {
        deg[v] = g.neighbors(v).iter().filter(|&&u| alive[u]).count();
    }
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    for &v in within {
        if deg[v] < d {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    let mut order = Vec::new();
    while let Some(v) = queue.pop_front() {
        alive[v] = false;
        order.push(v);
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] < d && !queued[u] {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let rest = within.iter().copied().filter(|&v| alive[v]).collect();
    (order, rest)
}

/// The largest vertex set inducing minimum degree at least `d`, ascending
/// (possibly empty). Pass `d = ceil(avg / 2)` for the average-degree form.
pub fn min_degree_core(g: &Graph, d: usize) -> Vec<usize> {
    let all: Vec<usize> = (0..g.n()).collect();
    peel(g, &all, d).1
}

/// [`min_degree_core`] of `G[within]`.
pub(crate) fn min_degree_core_within(g: &Graph, within: &[usize], d: usize) -> Vec<usize> {
    let mut set = within.to_vec();
    set.sort_unstable();
    set.dedup();
    peel(g, &set, d).1
}

/// Lowest-id-first greedy independent set.
pub fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut blocked = vec![false; g.n()];
    let mut set = Vec::new();
    for v in 0..g.n() {
        if !blocked[v] {
            set.push(v);
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    set
}

/// Outcome of [`degeneracy_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degeneracy {
    /// A proper colouring with colours `0..=k`, indexed by vertex.
    Coloring(Vec<usize>),
    /// A nonempty vertex set inducing minimum degree at least `k + 1`.
    Core(Vec<usize>),
}

impl Degeneracy {
    /// Colour classes of a colouring, in colour order.
    pub fn classes(&self) -> Option<Vec<Vec<usize>>> {
        let Degeneracy::Coloring(c) = self else {
            return None;
        };
        let colors = c.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); colors];
        for (v, &col) in c.iter().enumerate() {
            classes[col].push(v);
        }
        Some(classes)
    }
}

/// Peel vertices of degree at most `k`, then colour greedily in reverse
/// deletion order. If peeling gets stuck the survivors form a
/// `(k+1)`-core, returned as the failure witness.
pub fn degeneracy_coloring(g: &Graph, k: usize) -> Degeneracy {
    let all: Vec<usize> = (0..g.n()).collect();
    let (order, rest) = peel(g, &all, k + 1);
    if !rest.is_empty() {
        return Degeneracy::Core(rest);
    }
    let mut color = vec![usize::MAX; g.n()];
    let mut used = vec![usize::MAX; k + 2];
    for &v in order.iter().rev() {
        for &u in g.neighbors(v) {
            if color[u] != usize::MAX {
                used[color[u]] = v;
            }
        }
        let c = (0..=k).find(|&c| used[c] != v).expect("at most k coloured neighbours");
        color[v] = c;
    }
    Degeneracy::Coloring(color)
}

/// At most `dk + 1` vertices inducing minimum degree at least `d`, found
/// inside the `dk + 1` lowest ids. Under `alpha(g) <= k` the colouring of
/// that set with `d` colours must fail; if it succeeds, its largest colour
/// class is an independent set of size above `k`.
pub fn bounded_core(g: &Graph, d: usize, k: usize) -> Result<Vec<usize>> {
    if d == 0 || k == 0 {
        return Err(Error::Precondition(format!(
            "bounded core needs d, k >= 1 (d = {d}, k = {k})"
        )));
    }
    let size = d * k + 1;
    if g.n() < size {
        return Err(Error::Precondition(format!(
            "bounded core needs n >= dk + 1 = {size}, got {}",
            g.n()
        )));
    }
    let set: Vec<usize> = (0..size).collect();
    let sub = g.induced_subgraph(&set)?;
    match degeneracy_coloring(&sub.graph, d - 1) {
        Degeneracy::Core(core) => Ok(sub.lift(&core)),
        outcome @ Degeneracy::Coloring(_) => {
            let classes = outcome.classes().unwrap();
            let best = classes.into_iter().max_by_key(|c| c.len()).unwrap_or_default();
            Err(Error::violation(
                "bounded-core",
                Witness::IndependentSet(sub.lift(&best)),
            ))
        }
    }
}
