use std::collections::{BTreeMap, HashMap, VecDeque};

use super::bits::Bits;
use super::{CycleSearch, Meter, OracleBudget};
use crate::certificate::Cycle;
use crate::graph::Graph;
use crate::report::{Hypothesis, Provenance, SpectrumReport};

/// Plain DFS gets this many nodes before short searches switch to
/// meet-in-the-middle.
const DFS_NODE_THRESHOLD: u64 = 2_000_000;
/// Longest target length for which meet-in-the-middle is attempted.
const MITM_MAX_LEN: usize = 16;

/// BFS distances to `s` inside `G[{v >= s}]`.
fn anchored_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if w > s && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

struct Dfs<'a> {
    g: &'a Graph,
    len: usize,
    anchor: usize,
    dist: Vec<usize>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    meter: &'a mut Meter,
}

impl Dfs<'_> {
    fn go(&mut self, u: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let depth = self.path.len() - 1;
        if depth == self.len - 1 {
            return self.g.has_edge(u, self.anchor) && self.path[1] < u;
        }
        for &w in self.g.neighbors(u) {
            if w <= self.anchor || self.on_path[w] || self.dist[w] > self.len - 1 - depth {
                continue;
            }
            if depth + 1 == self.len - 1 && self.len > 2 && w < self.path[1] {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            if self.go(w) {
                return true;
            }
            self.path.pop();
            self.on_path[w] = false;
            if self.meter.exceeded() {
                return false;
            }
        }
        false
    }
}

fn dfs_search(g: &Graph, len: usize, meter: &mut Meter) -> Option<Cycle> {
    let n = g.n();
    for s in 0..n {
        if n - s < len {
            break;
        }
        let dist = anchored_distances(g, s);
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut dfs = Dfs {
            g,
            len,
            anchor: s,
            dist,
            on_path,
            path: vec![s],
            meter: &mut *meter,
        };
        if dfs.go(s) {
            return Some(Cycle::new(dfs.path));
        }
        if meter.exceeded() {
            return None;
        }
    }
    None
}

/// Endpoint to (interior set, path) pairs.
type HalfPaths = HashMap<usize, Vec<(Bits, Vec<usize>)>>;

/// Simple paths of exactly `h` edges from `s` through vertices above `s`,
/// grouped by endpoint.
fn half_paths(g: &Graph, s: usize, h: usize, dist: &[usize], other: usize, meter: &mut Meter) -> Option<HalfPaths> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        s: usize,
        h: usize,
        dist: &[usize],
        other: usize,
        path: &mut Vec<usize>,
        used: &mut Bits,
        out: &mut HalfPaths,
        meter: &mut Meter,
    ) -> bool {
        if !meter.tick() {
            return false;
        }
        let u = *path.last().unwrap();
        if path.len() - 1 == h {
            let mut interior = Bits::new(g.n());
            for &v in &path[1..h] {
                interior.insert(v);
            }
            out.entry(u).or_default().push((interior, path.clone()));
            return true;
        }
        let left = h - (path.len() - 1);
        for &w in g.neighbors(u) {
            // after reaching the endpoint the other half must still close
            if w <= s || used.contains(w) || dist[w] > left - 1 + other {
                continue;
            }
            used.insert(w);
            path.push(w);
            let ok = rec(g, s, h, dist, other, path, used, out, meter);
            path.pop();
            used.remove(w);
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = HashMap::new();
    let mut used = Bits::new(g.n());
    used.insert(s);
    let mut path = vec![s];
    rec(g, s, h, dist, other, &mut path, &mut used, &mut out, meter).then_some(out)
}

fn mitm_search(g: &Graph, len: usize, meter: &mut Meter) -> Option<Cycle> {
    let n = g.n();
    let h1 = len / 2;
    let h2 = len - h1;
    for s in 0..n {
        if n - s < len {
            break;
        }
        let dist = anchored_distances(g, s);
        let first = half_paths(g, s, h1, &dist, h2, meter)?;
        let second = if h1 == h2 {
            None
        } else {
            Some(half_paths(g, s, h2, &dist, h1, meter)?)
        };
        let mut ends: Vec<usize> = first.keys().copied().collect();
        ends.sort_unstable();
        for t in ends {
            let a = &first[&t];
            let b = match &second {
                Some(map) => match map.get(&t) {
                    Some(list) => list,
                    None => continue,
                },
                None => a,
            };
            for (i, (ma, pa)) in a.iter().enumerate() {
                let start = if second.is_none() { i + 1 } else { 0 };
                for (mb, pb) in &b[start..] {
                    if !meter.tick() {
                        return None;
                    }
                    if !ma.intersects(mb) {
                        let mut verts = pa.clone();
                        verts.extend(pb[1..pb.len() - 1].iter().rev());
                        return Some(Cycle::new(verts));
                    }
                }
            }
        }
    }
    None
}

/// Find a cycle of exactly `len` vertices, or prove there is none.
///
/// Cycles are enumerated from their minimum vertex, with the second vertex
/// below the last one so each cycle is met once. Branches are cut when the
/// anchor is out of reach in the remaining steps.
pub fn find_cycle_of_length(g: &Graph, len: usize, budget: &OracleBudget) -> CycleSearch {
    if len < 3 || len > g.n() {
        return CycleSearch::Absent { nodes: 0 };
    }
    let total = budget.node_limit.unwrap_or(u64::MAX);
    let first_limit = if len <= MITM_MAX_LEN {
        total.min(DFS_NODE_THRESHOLD)
    } else {
        total
    };
    let mut meter = Meter::new(&OracleBudget {
        node_limit: Some(first_limit),
        ..*budget
    });
    let found = dfs_search(g, len, &mut meter);
    let used = meter.nodes();
    if !meter.exceeded() {
        return match found {
            Some(c) => CycleSearch::Found(c),
            None => CycleSearch::Absent { nodes: used },
        };
    }
    if first_limit == total {
        return CycleSearch::Aborted { nodes: used };
    }
    let mut meter = Meter::new(&OracleBudget {
        node_limit: Some(total - used),
        ..*budget
    });
    let found = mitm_search(g, len, &mut meter);
    let nodes = used + meter.nodes();
    match found {
        Some(c) => CycleSearch::Found(c),
        None if meter.exceeded() => CycleSearch::Aborted { nodes },
        None => CycleSearch::Absent { nodes },
    }
}

/// Meet-in-the-middle search only, for cross-checking.
#[cfg(test)]
fn find_cycle_mitm(g: &Graph, len: usize, budget: &OracleBudget) -> CycleSearch {
    if len < 3 || len > g.n() {
        return CycleSearch::Absent { nodes: 0 };
    }
    let mut meter = Meter::new(budget);
    match mitm_search(g, len, &mut meter) {
        Some(c) => CycleSearch::Found(c),
        None if meter.exceeded() => CycleSearch::Aborted { nodes: meter.nodes() },
        None => CycleSearch::Absent { nodes: meter.nodes() },
    }
}

/// Per-length oracle results over a range.
#[derive(Debug, Clone)]
pub struct OracleSpectrum {
    pub report: SpectrumReport,
    /// Lengths proved absent, with the search-node count of the proof.
    pub absent: BTreeMap<usize, u64>,
    /// Lengths whose search ran out of budget.
    pub aborted: Vec<usize>,
}

/// Run [`find_cycle_of_length`] for every length in `lo..=hi`, each with
/// its own copy of `budget`.
pub fn cycle_spectrum(g: &Graph, lo: usize, hi: usize, budget: &OracleBudget) -> OracleSpectrum {
    let lo = lo.max(3);
    let hi = hi.min(g.n());
    let mut report = SpectrumReport::new(Hypothesis {
        theorem: "oracle".into(),
        n: g.n(),
        k: 0,
        min_degree: g.min_degree(),
        seed: None,
        graph_sha256: crate::io::graph_hash(g),
        range: (lo, hi.max(lo.saturating_sub(1))),
    });
    let mut absent = BTreeMap::new();
    let mut aborted = Vec::new();
    for len in lo..=hi {
        match find_cycle_of_length(g, len, budget) {
            CycleSearch::Found(c) => report.insert(g, c, Provenance::Oracle).expect("oracle cycles verify"),
            CycleSearch::Absent { nodes } => {
                absent.insert(len, nodes);
            }
            CycleSearch::Aborted { .. } => aborted.push(len),
        }
    }
    report.refresh_gaps();
    OracleSpectrum {
        report,
        absent,
        aborted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_cycle;
    use crate::generators::generate_extremal;

    fn found(g: &Graph, len: usize) -> Cycle {
        match find_cycle_of_length(g, len, &OracleBudget::unlimited()) {
            CycleSearch::Found(c) => {
                assert_eq!(c.len(), len);
                verify_cycle(g, &c).unwrap();
                c
            }
            other => panic!("expected a {len}-cycle, got {other:?}"),
        }
    }

    #[test]
    fn complete_and_petersen() {
        found(&Graph::complete(5), 4);
        let p = Graph::petersen();
        found(&p, 5);
        for len in [3, 4, 7] {
            assert!(find_cycle_of_length(&p, len, &OracleBudget::unlimited()).is_absent());
            assert!(find_cycle_mitm(&p, len, &OracleBudget::unlimited()).is_absent());
        }
        for len in [5, 6, 8, 9] {
            found(&p, len);
            let c = find_cycle_mitm(&p, len, &OracleBudget::unlimited());
            verify_cycle(&p, c.cycle().unwrap()).unwrap();
        }
        assert!(find_cycle_of_length(&p, 10, &OracleBudget::unlimited()).is_absent());
    }

    #[test]
    fn extremal_misses_2k_minus_1() {
        let g = generate_extremal(3).unwrap();
        let search = find_cycle_of_length(&g, 5, &OracleBudget::unlimited());
        assert!(matches!(search, CycleSearch::Absent { nodes } if nodes > 0));
        assert!(find_cycle_mitm(&g, 5, &OracleBudget::unlimited()).is_absent());
    }

    #[test]
    fn spectra() {
        let s = cycle_spectrum(&Graph::complete(5), 3, 5, &OracleBudget::unlimited());
        assert!(s.report.gaps.is_empty());
        let s = cycle_spectrum(&Graph::cycle(5), 3, 5, &OracleBudget::unlimited());
        assert_eq!(s.report.gaps, vec![3, 4]);
        assert_eq!(s.absent.keys().copied().collect::<Vec<_>>(), vec![3, 4]);
        let s = cycle_spectrum(&generate_extremal(3).unwrap(), 3, 12, &OracleBudget::unlimited());
        assert_eq!(s.report.gaps, vec![5]);
        assert!(s.aborted.is_empty());
    }

    #[test]
    fn abort_is_reported() {
        let g = generate_extremal(4).unwrap();
        let r = find_cycle_of_length(&g, 24, &OracleBudget::nodes(5));
        assert_eq!(r, CycleSearch::Aborted { nodes: 6 });
    }
}
