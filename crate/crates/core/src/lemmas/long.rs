use std::collections::BTreeMap;

use crate::certificate::{verify_cycle, Cycle};
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::rng::RandomSource;

use super::absorb::CycleState;

/// Hamilton cycles of the shrinking sequence `G_n, ..., G_{ceil(n/12)}`.
#[derive(Debug, Clone)]
pub struct LongCycles {
    pub cycles: BTreeMap<usize, Cycle>,
    /// The protected sample `X`, sorted.
    pub x_set: Vec<usize>,
    /// Sampling attempts used.
    pub attempts: usize,
    /// Vertices removed, in order.
    pub removed: Vec<usize>,
}

/// Cycles of every length in `[ceil(n/12), n]` for a Hamiltonian `g` with
/// `k >= 3`, `n <= 150k^3` and minimum degree at least `600k`.
///
/// Samples `X` with density 1/24 and repeatedly deletes a `Y` vertex that
/// lies inside a jump of length at most `8k`, re-absorbing the rest of the
/// jump interior.
pub fn long_cycles(g: &Graph, c: &Cycle, k: usize, rng: &mut RandomSource) -> Result<LongCycles> {
    let n = g.n();
    if k < 3 || n > 150 * k * k * k || g.min_degree() < 600 * k {
        return Err(Error::Precondition(format!(
            "long cycles need k >= 3, n <= 150k^3 and min degree >= 600k (k = {k}, n = {n}, min degree = {})",
            g.min_degree()
        )));
    }
    if c.len() != n {
        return Err(Error::Precondition(format!(
            "cycle has length {}, expected n = {n}",
            c.len()
        )));
    }
    verify_cycle(g, c).map_err(|e| Error::Precondition(format!("input cycle does not verify: {e}")))?;

    let (in_x, attempts) = rng.retry("long/partition", |r| {
        let in_x: Vec<bool> = (0..n).map(|_| r.bernoulli(1, 24)).collect();
        let size = in_x.iter().filter(|&&b| b).count();
        if 16 * size > n {
            return None;
        }
        let enough = (0..n).all(|v| 2 * g.neighbors(v).iter().filter(|&&u| in_x[u]).count() >= 25 * k);
        enough.then_some(in_x)
    })?;

    let target = n.div_ceil(12);
    let reach = 8 * k;
    let mut st = CycleState::new(n, c.verts.clone());
    let mut cycles = BTreeMap::new();
    cycles.insert(n, c.clone());
    let mut removed = Vec::new();
    while st.len() > target {
        let i = st.len();
        let mut found = None;
        'scan: for p in 0..i {
            let Some(dy) = (1..reach).find(|&o| !in_x[st.at(p + o)]) else {
                continue;
            };
            let u = st.at(p);
            for j in (dy + 1).max(2)..=reach {
                if g.has_edge(u, st.at(p + j)) {
                    found = Some((p, j, dy));
                    break 'scan;
                }
            }
        }
        let Some((p, j, dy)) = found else {
            return Err(Error::violation(
                format!("long/length-{i}"),
                Witness::Note(format!(
                    "no jump of length <= {reach} has a Y vertex inside its interior"
                )),
            ));
        };
        let mut interior = st.contract(p, j);
        let y = interior.remove(dy - 1);
        for &v in &interior {
            st.absorb(g, v, k)
                .map_err(|e| e.in_stage(&format!("long/length-{i}")))?;
        }
        removed.push(y);
        cycles.insert(st.len(), st.cycle());
    }
    Ok(LongCycles {
        cycles,
        x_set: (0..n).filter(|&v| in_x[v]).collect(),
        attempts,
        removed,
    })
}
