//! Deterministic instance families.

use crate::certificate::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The non-pancyclic family: `k` cliques of size `2k - 2` joined in a ring
/// by a matching with one edge between consecutive cliques.
///
/// Clique `i` occupies ids `i(2k-2) .. (i+1)(2k-2)`. The matching edge from
/// clique `i` to clique `i+1 (mod k)` joins the lowest-id vertex of each that
/// is not yet matched, so clique `i` uses its vertex `1` towards clique
/// `i+1` and its vertex `0` towards clique `i-1` (clique 0 the other way
/// round).
pub fn generate_extremal(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Input(format!("extremal family needs k >= 3, got {k}")));
    }
    let size = 2 * k - 2;
    let n = k * size;
    let mut edges = Vec::new();
    for b in 0..k {
        let base = b * size;
        for i in 0..size {
            for j in i + 1..size {
                edges.push((base + i, base + j));
            }
        }
    }
    let mut next_free = vec![0usize; k];
    for b in 0..k {
        let c = (b + 1) % k;
        let u = b * size + next_free[b];
        next_free[b] += 1;
        let v = c * size + next_free[c];
        next_free[c] += 1;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

/// Complement of the `p`-th power of the `n`-cycle: `u ~ v` iff their cyclic
/// distance exceeds `p`. Minimum degree `n - 2p - 1`, independence number
/// `p + 1`.
pub fn generate_power_complement(n: usize, p: usize) -> Result<Graph> {
    if n < 2 * p + 2 {
        return Err(Error::Input(format!(
            "power complement needs n >= 2p + 2, got n = {n}, p = {p}"
        )));
    }
    let adj = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| {
                    let d = u.abs_diff(v);
                    d.min(n - d) > p
                })
                .collect()
        })
        .collect();
    Ok(Graph::from_sorted_adjacency(adj))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The Hamilton cycle `0, p+1, 2(p+1), ... (mod n)` of
/// [`generate_power_complement`], valid when `gcd(p + 1, n) = 1`.
pub fn known_hamilton_cycle_power_complement(n: usize, p: usize) -> Result<Cycle> {
    if n < 2 * p + 3 {
        return Err(Error::Input(format!("need n >= 2p + 3, got n = {n}, p = {p}")));
    }
    if gcd(p + 1, n) != 1 {
        return Err(Error::Input(format!("gcd({}, {n}) != 1", p + 1)));
    }
    Ok(Cycle::new((0..n).map(|i| i * (p + 1) % n).collect()))
}
