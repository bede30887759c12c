//! Randomized fixtures and property checks shared by the integration tests
//! and the acceptance suite. Each check takes a seed and returns a
//! description of the first violated property.

#![allow(dead_code)]

use pancyc::lemmas::{absorb_vertex, delete_one_vertex, efrs_dichotomy, EfrsOutcome};
use pancyc::oracles::{find_cycle_of_length, independence_number, vertex_connectivity, CycleSearch, OracleBudget};
use pancyc::toolbox::{bfs_layering, bipartite_subgraph, shorten_path, BipartiteSub};
use pancyc::{verify_cycle, verify_path, Cycle, Graph, Path};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {{
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    }};
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Run `check` on seeds `0..trials`, stopping at the first failure.
pub fn run_trials(trials: u64, check: impl Fn(u64) -> Check) -> Check {
    for seed in 0..trials {
        check(seed).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok(())
}

pub fn gnp(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// A graph covered by `k` balanced cliques (so alpha <= k) with extra
/// random edges, plus the returned sequence planted as a path or cycle.
pub fn clique_cover(r: &mut ChaCha8Rng, n: usize, k: usize, extra: f64, planted: &[usize], close: bool) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(r);
    let mut part = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        part[v] = i % k;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] == part[v] || r.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    edges.extend(planted.windows(2).map(|w| (w[0], w[1])));
    if close && planted.len() > 2 {
        edges.push((planted[planted.len() - 1], planted[0]));
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

fn shuffled(r: &mut ChaCha8Rng, items: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = items.into_iter().collect();
    v.shuffle(r);
    v
}

fn sorted(vs: &[usize]) -> Vec<usize> {
    let mut v = vs.to_vec();
    v.sort_unstable();
    v
}

pub fn absorb_trial(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = r.gen_range(2..=4);
    let n = r.gen_range(6 * k..=60);
    let x = r.gen_range(0..n);
    let h = shuffled(&mut r, (0..n).filter(|&v| v != x));
    let extra = r.gen_range(0.0..0.3);
    let g = clique_cover(&mut r, n, k, extra, &h, true);
    let out = absorb_vertex(&g, &Cycle::new(h), x, k).map_err(|e| e.to_string())?;
    verify_cycle(&g, &out)?;
    ensure!(out.len() == n, "absorbed cycle has length {}, expected {n}", out.len());
    Ok(())
}

pub fn delete_trial(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = r.gen_range(2..=3);
    let need = (2 * k + 1) * (k * k + k + 1);
    let n = r.gen_range(need..=need + 40);
    let c = shuffled(&mut r, 0..n);
    let extra = r.gen_range(0.0..0.3);
    let g = clique_cover(&mut r, n, k, extra, &c, true);
    let out = delete_one_vertex(&g, &Cycle::new(c), k).map_err(|e| e.to_string())?;
    verify_cycle(&g, &out)?;
    ensure!(out.len() == n - 1, "cycle has length {}, expected {}", out.len(), n - 1);
    Ok(())
}

pub fn shorten_trial(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = r.gen_range(1..=4);
    let n = r.gen_range(4 * k.max(2)..=60);
    let verts = shuffled(&mut r, 0..n);
    let extra = r.gen_range(0.0..0.5);
    let g = clique_cover(&mut r, n, k, extra, &verts, false);
    let p = Path::new(verts);
    let q = r.gen_range(1..=p.len());
    let out = shorten_path(&g, &p, q, k).map_err(|e| e.to_string())?;
    verify_path(&g, &out)?;
    ensure!(
        out.start() == p.start() && out.end() == p.end(),
        "ends moved: {}..{} became {}..{}",
        p.start(),
        p.end(),
        out.start(),
        out.end()
    );
    ensure!(
        out.len() >= q && out.len() <= q + 2 * k - 2,
        "length {} outside [{q}, {}]",
        out.len(),
        q + 2 * k - 2
    );
    Ok(())
}

fn check_bipartite(g: &Graph, b: &BipartiteSub) -> Check {
    ensure!(b.x.len() + b.y.len() == g.n(), "sides do not partition the vertices");
    for v in 0..g.n() {
        let cross = b.graph.degree(v);
        ensure!(
            2 * cross >= g.degree(v),
            "vertex {v} keeps {cross} of {} edges",
            g.degree(v)
        );
        for &u in b.graph.neighbors(v) {
            ensure!(g.has_edge(u, v), "edge {u}-{v} not in the host");
            ensure!(b.side(u) != b.side(v), "edge {u}-{v} inside one side");
        }
    }
    Ok(())
}

pub fn bipartite_trial(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(1..=40);
    let p = r.gen_range(0.05..0.95);
    let g = gnp(&mut r, n, p);
    check_bipartite(&g, &bipartite_subgraph(&g))
}

/// A random graph whose bipartite subgraph has cross-degree >= 5: dense
/// and small (m = 1) or sparse and large (deeper layerings).
fn layered_fixture(r: &mut ChaCha8Rng) -> (Graph, BipartiteSub) {
    let sparse = r.gen_bool(0.5);
    loop {
        let g = if sparse {
            let n = r.gen_range(150..=400);
            let avg = r.gen_range(14.0..30.0);
            gnp(r, n, avg / n as f64)
        } else {
            let n = r.gen_range(24..=90);
            let p = r.gen_range(0.4..0.95);
            gnp(r, n, p)
        };
        let b = bipartite_subgraph(&g);
        if b.min_degree >= 5 {
            return (g, b);
        }
    }
}

pub fn bfs_trial(seed: u64) -> Check {
    let mut r = rng(seed);
    let (g, b) = layered_fixture(&mut r);
    let x = r.gen_range(0..g.n());
    let l = bfs_layering(&b, x).map_err(|e| e.to_string())?;
    ensure!(l.m >= 1, "m = 0");
    ensure!(
        l.is_dense(&b, l.m),
        "layers {} and {} miss the 2d/9 threshold",
        l.m,
        l.m + 1
    );
    for i in 0..l.m {
        ensure!(
            !l.is_dense(&b, i),
            "layer {i} already dense, so m = {} is not minimal",
            l.m
        );
        ensure!(
            l.layer(i + 1).len() >= 2 * l.layer(i).len(),
            "|N_{}| = {} < 2|N_{i}| = {}",
            i + 1,
            l.layer(i + 1).len(),
            2 * l.layer(i).len()
        );
    }
    for layer in &l.layers {
        for &u in layer {
            for &v in layer {
                ensure!(!b.graph.has_edge(u, v), "layer edge {u}-{v}");
            }
        }
    }
    let (n, d) = (g.n() as f64, l.d as f64);
    ensure!(
        (l.m as f64) <= ((n + d - 1.0) / d).log2(),
        "m = {} above the log bound",
        l.m
    );
    Ok(())
}

pub fn efrs_trial(seed: u64) -> Check {
    let mut r = rng(seed);
    let (g, b) = layered_fixture(&mut r);
    let l = bfs_layering(&b, 0).map_err(|e| e.to_string())?;
    let h = r.gen_range(1..=l.m);
    let len = r.gen_range(2 * h + 1..=2 * h + 1 + l.layer(h).len()).max(3);
    match efrs_dichotomy(&g, &l, h, len).map_err(|e| e.to_string())? {
        EfrsOutcome::Cycle(c) => {
            verify_cycle(&g, &c)?;
            ensure!(c.len() == len, "cycle has length {}, expected {len}", c.len());
        }
        EfrsOutcome::Coloring(col) => {
            ensure!(
                sorted(&col.order) == sorted(l.layer(h)),
                "colouring is not of layer {h}"
            );
            let max = col.color.iter().copied().max().unwrap_or(0);
            ensure!(
                max + 2 < len,
                "colour {max} implies an increasing path of length {}",
                len - 2
            );
            for (i, &u) in col.order.iter().enumerate() {
                for (j, &v) in col.order.iter().enumerate() {
                    if g.has_edge(u, v) {
                        ensure!(col.color[i] != col.color[j], "edge {u}-{v} is monochromatic");
                    }
                }
            }
            for &u in &col.independent {
                for &v in &col.independent {
                    ensure!(!g.has_edge(u, v), "colour class has edge {u}-{v}");
                }
            }
        }
    }
    Ok(())
}

pub fn naive_alpha(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn connected_without(g: &Graph, removed: u32) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| removed >> v & 1 == 0) else {
        return true;
    };
    let mut seen = removed | 1 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Smallest separator, or `n - 1` for complete graphs.
pub fn naive_kappa(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (s.count_ones() as usize) + 2 <= n && !connected_without(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n.saturating_sub(1))
}

/// Whether a cycle on `len` vertices exists, by plain path enumeration.
pub fn naive_has_cycle(g: &Graph, len: usize) -> bool {
    fn extend(g: &Graph, path: &mut Vec<usize>, len: usize) -> bool {
        let last = *path.last().expect("non-empty");
        if path.len() == len {
            return g.has_edge(last, path[0]);
        }
        for &w in g.neighbors(last) {
            if w > path[0] && !path.contains(&w) {
                path.push(w);
                if extend(g, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    len >= 3 && (0..g.n()).any(|s| extend(g, &mut vec![s], len))
}

pub fn oracle_trial(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(1..=9);
    let p = r.gen_range(0.0..1.0);
    let g = gnp(&mut r, n, p);
    let budget = OracleBudget::unlimited();
    let alpha = independence_number(&g, &budget).map_err(|e| e.to_string())?;
    ensure!(
        alpha == naive_alpha(&g),
        "alpha {alpha}, enumeration {}",
        naive_alpha(&g)
    );
    let kappa = vertex_connectivity(&g);
    ensure!(
        kappa == naive_kappa(&g),
        "kappa {kappa}, enumeration {}",
        naive_kappa(&g)
    );
    for len in 3..=n {
        let expect = naive_has_cycle(&g, len);
        match find_cycle_of_length(&g, len, &budget) {
            CycleSearch::Found(c) => {
                verify_cycle(&g, &c)?;
                ensure!(
                    c.len() == len && expect,
                    "found a {len}-cycle, enumeration says {expect}"
                );
            }
            CycleSearch::Absent { .. } => ensure!(!expect, "{len}-cycle reported absent"),
            CycleSearch::Aborted { .. } => return Err(format!("unlimited search for {len} aborted")),
        }
    }
    Ok(())
}
