use std::collections::{BTreeMap, VecDeque};

use crate::certificate::{Cycle, Path};
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::lemmas::{bridge_cycles, close_through_paths, consecutive_paths_with, long_cycles, CycleState};
use crate::report::Provenance;
use crate::rng::RandomSource;
use crate::toolbox::{bipartite_subgraph, min_degree_core_within, NONE};

use super::large_n::{check_hamilton, large_n_certs};
use super::short::{short_cycles, ShortOptions};
use super::{finish, Certs, PipelineOutput, PipelineTrace, StageRecord};

/// Certified cycles of every length in `3..=n` for a Hamiltonian graph with
/// minimum degree at least `600k` and independence number at most `k`.
pub fn pancyclic_min_degree(g: &Graph, c: &Cycle, k: usize, rng: &mut RandomSource) -> Result<PipelineOutput> {
    let n = g.n();
    let d = g.min_degree();
    if k == 0 || d < 600 * k {
        return Err(Error::Precondition(format!(
            "pan-mindeg needs k >= 1 and min degree >= 600k = {} (min degree {d})",
            600 * k
        )));
    }
    check_hamilton(g, c)?;
    let seed = rng.seed();
    let mut trace = PipelineTrace::new("pan-mindeg", k, Some(seed));
    if n >= 150 * k * k * k {
        trace.push(StageRecord::new("dispatch", "n >= 150k^3: large-n construction").value("n", n));
        let certs = large_n_certs(g, c, k, &mut trace)?;
        let report = finish(g, "pan-mindeg", k, Some(seed), (3, n), certs)?;
        return Ok(PipelineOutput { report, trace });
    }
    if k < 3 {
        return Err(Error::internal("pan-mindeg", "600k < n < 150k^3 forces k >= 3"));
    }
    trace.push(StageRecord::new("dispatch", "n < 150k^3: k >= 3 branch").value("n", n));

    let mut certs =
        short_cycles(g, k, d / 81, rng, ShortOptions::default(), &mut trace).map_err(|e| e.in_stage("pan-mindeg"))?;

    let long = long_cycles(g, c, k, rng).map_err(|e| e.in_stage("pan-mindeg"))?;
    trace.push(
        StageRecord::new("long", "shrinking sequence with protected X")
            .value("attempts", long.attempts)
            .set("X", long.x_set)
            .lengths(n.div_ceil(12), n),
    );
    certs.add_all(long.cycles.into_values(), Provenance::LongShrink);

    let middle = middle_cycles(g, c, k, rng, &mut trace).map_err(|e| e.in_stage("pan-mindeg"))?;
    certs.merge(middle);
    let report = finish(g, "pan-mindeg", k, Some(seed), (3, n), certs)?;
    Ok(PipelineOutput { report, trace })
}

/// Outcome of one attempt to drop a `Y` vertex from the current cycle.
enum Step {
    /// The whole jump interior but `y0` went back in.
    Shrunk(usize),
    /// Absorption got stuck; `s` is left out together with `y0`.
    Stuck { y0: usize, s: Vec<usize> },
}

fn middle_cycles(g: &Graph, c: &Cycle, k: usize, rng: &mut RandomSource, trace: &mut PipelineTrace) -> Result<Certs> {
    let n = g.n();
    let (in_x, attempts) = rng.retry("partition", |r| {
        let in_x: Vec<bool> = (0..n).map(|_| r.bernoulli(1, 2)).collect();
        let nx = in_x.iter().filter(|&&b| b).count();
        if 3 * nx < n || 3 * (n - nx) < n {
            return None;
        }
        let spread = (0..n).all(|v| {
            let nb = g.neighbors(v);
            let cx = nb.iter().filter(|&&u| in_x[u]).count();
            cx >= 200 * k && nb.len() - cx >= 200 * k
        });
        spread.then_some(in_x)
    })?;
    trace.push(
        StageRecord::new("partition", "X/Y halves with 200k neighbours on each side")
            .value("attempts", attempts)
            .value("|X|", in_x.iter().filter(|&&b| b).count()),
    );

    // shrink G' while a jump interior can be absorbed back without its Y vertex
    let mut st = CycleState::new(n, c.verts.clone());
    let mut dropped = Vec::new();
    loop {
        let y_left = st.verts.iter().filter(|&&v| !in_x[v]).count();
        if y_left <= 4 * k {
            trace.push(
                StageRecord::new("minimality", "adopted smaller Hamiltonian subgraphs")
                    .value("n'", st.len())
                    .set("dropped", dropped),
            );
            let c1 = st.cycle();
            let d_set: Vec<usize> = (0..n).filter(|&v| !st.contains(v)).collect();
            let br = bridge_cycles(g, &c1, &d_set, k).map_err(|e| e.in_stage("case-a"))?;
            trace.push(
                StageRecord::new("case-a", "|V(G') & Y| <= 4k: bridge with A = V(G'), B = D")
                    .value("|V(G') & Y|", y_left)
                    .value("x", br.x)
                    .value("y", br.y)
                    .value("a", br.a)
                    .value("b", br.b)
                    .lengths(br.range.0, br.range.1),
            );
            let mut certs = Certs::default();
            certs.add_all(br.cycles.into_values(), Provenance::BridgeArc);
            return Ok(certs);
        }
        let before = st.cycle();
        match shrink_step(g, &mut st, &in_x, k)? {
            Step::Shrunk(y0) => dropped.push(y0),
            Step::Stuck { y0, s } => {
                trace.push(
                    StageRecord::new("minimality", "absorption stuck")
                        .value("n'", before.len())
                        .value("y0", y0)
                        .set("dropped", dropped)
                        .set("S", s.clone()),
                );
                let pos = before.positions(n);
                let d_set: Vec<usize> = (0..n).filter(|&v| pos[v] == NONE).collect();
                return case_b(g, k, &before, &st, &s, &d_set, trace);
            }
        }
    }
}

/// Contract a jump with `1..=2k-1` `Y` vertices inside, then absorb its
/// interior except one `Y` vertex `y0` while some vertex has `k + 1`
/// neighbours on the cycle.
fn shrink_step(g: &Graph, st: &mut CycleState, in_x: &[bool], k: usize) -> Result<Step> {
    let i = st.len();
    let ypos: Vec<usize> = (0..i).filter(|&p| !in_x[st.at(p)]).collect();
    let t = ypos.len();
    let span = |j: usize| (ypos[(j + 2 * k) % t] + i - ypos[j]) % i;
    let j = (0..t)
        .find(|&j| 2 * span(j) <= i)
        .ok_or_else(|| Error::internal("shrink", "no interval with 2k + 1 Y vertices fits in half the cycle"))?;
    let picks: Vec<usize> = (0..=k).map(|u| ypos[(j + 2 * u) % t]).collect();
    let mut pair = None;
    'outer: for (u, &pu) in picks.iter().enumerate() {
        for &pv in &picks[u + 1..] {
            if g.has_edge(st.verts[pu], st.verts[pv]) {
                pair = Some((pu, pv));
                break 'outer;
            }
        }
    }
    let Some((pu, pv)) = pair else {
        let mut set: Vec<usize> = picks.iter().map(|&p| st.verts[p]).collect();
        set.sort_unstable();
        return Err(Error::violation("shrink", Witness::IndependentSet(set)));
    };
    let len = (pv + i - pu) % i;
    let mut pending = st.contract(pu, len);
    let at = pending
        .iter()
        .position(|&v| !in_x[v])
        .expect("a picked Y vertex lies inside");
    let y0 = pending.remove(at);
    while let Some(at) = pending.iter().position(|&v| st.degree_into(g, v) > k) {
        let v = pending.remove(at);
        st.absorb(g, v, k).map_err(|e| e.in_stage("shrink"))?;
    }
    if pending.is_empty() {
        Ok(Step::Shrunk(y0))
    } else {
        pending.sort_unstable();
        Ok(Step::Stuck { y0, s: pending })
    }
}

/// Cycles of intermediate length once absorption leaves a set `s` whose
/// vertices see at most `k` vertices of the cycle `c2` of `G''`. `c1` is
/// the Hamilton cycle of `G'` and `d_set = V(G) \ V(G')`.
fn case_b(
    g: &Graph,
    k: usize,
    c1: &Cycle,
    c2: &CycleState,
    s: &[usize],
    d_set: &[usize],
    trace: &mut PipelineTrace,
) -> Result<Certs> {
    let mut certs = Certs::default();
    let anchored = |v: usize| g.neighbors(v).iter().copied().filter(|&u| c2.contains(u));
    let (x, a) = s
        .iter()
        .find_map(|&x| anchored(x).next().map(|a| (x, a)))
        .ok_or_else(|| Error::internal("case-b", "no vertex of S sees G''"))?;
    let sub = g.induced_subgraph(s)?;
    let bs = bipartite_subgraph(&sub.graph);
    let local_x = sub.local_id(x).expect("x in S");
    let r = consecutive_paths_with(&sub.graph, &bs, local_x, k, false).map_err(|e| e.in_stage("case-b"))?;
    let y = sub.host_id(r.y);
    let paths: BTreeMap<usize, Path> = r
        .paths
        .iter()
        .map(|(&l, p)| (l, Path::new(sub.lift(&p.verts))))
        .collect();
    let cyc2 = c2.cycle();
    let hi = cyc2.len() / 2;
    let arc_to = |b: usize| cyc2.longer_arc(c2.position(a), c2.position(b));

    if let Some(b) = anchored(y).find(|&u| u != a) {
        let lo = r.m + 2 * k + 1;
        let cycles = close_through_paths(g, arc_to(b), k, lo, hi, &paths).map_err(|e| e.in_stage("case-b1"))?;
        trace.push(
            StageRecord::new("case-b1", "y has a second anchor")
                .value("x", x)
                .value("y", y)
                .value("a", a)
                .value("b", b)
                .value("m", r.m)
                .lengths(lo, hi),
        );
        certs.add_all(cycles.into_values(), Provenance::AnchoredArc);
        return Ok(certs);
    }

    let n = g.n();
    let mut in_d = vec![false; n];
    for &v in d_set {
        in_d[v] = true;
    }
    let y1 = g.neighbors(y).iter().copied().find(|&u| in_d[u]).ok_or_else(|| {
        Error::violation(
            "case-b2",
            Witness::Note(format!("vertex {y} has one anchor and no neighbour in D")),
        )
    })?;
    // BFS over the component Z of G[D] containing y'
    let mut parent = vec![NONE; n];
    let mut depth = vec![NONE; n];
    let mut order = vec![y1];
    depth[y1] = 0;
    let mut queue = VecDeque::from([y1]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if in_d[u] && depth[u] == NONE {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    let mut zs = order.clone();
    zs.sort_unstable();
    let z_core = min_degree_core_within(g, &zs, 20 * k);
    if !z_core.is_empty() {
        let br = bridge_cycles(g, c1, &z_core, k).map_err(|e| e.in_stage("case-b2-core"))?;
        trace.push(
            StageRecord::new("case-b2-core", "Z has a 20k-core: bridge with A = V(G')")
                .value("y", y)
                .value("y'", y1)
                .set("Z'", z_core)
                .lengths(br.range.0, br.range.1),
        );
        certs.add_all(br.cycles.into_values(), Provenance::BridgeArc);
        return Ok(certs);
    }

    let z = order
        .iter()
        .copied()
        .take_while(|&v| depth[v] <= k)
        .find(|&v| anchored(v).nth(1).is_some())
        .ok_or_else(|| {
            Error::violation(
                "case-b2-walk",
                Witness::Note(format!("no vertex within distance {k} of {y1} in Z has two anchors")),
            )
        })?;
    let b = anchored(z).find(|&u| u != a).expect("two anchors");
    let mut walk = vec![z];
    while *walk.last().unwrap() != y1 {
        walk.push(parent[*walk.last().unwrap()]);
    }
    walk.reverse();
    let zpaths: BTreeMap<usize, Path> = paths
        .values()
        .map(|p| {
            let mut verts = p.verts.clone();
            verts.extend(&walk);
            (verts.len() - 1, Path::new(verts))
        })
        .collect();
    let i = walk.len();
    let lo = r.m + i + 2 * k + 1;
    let cycles = close_through_paths(g, arc_to(b), k, lo, hi, &zpaths).map_err(|e| e.in_stage("case-b2-walk"))?;
    trace.push(
        StageRecord::new("case-b2-walk", "walk in Z to a doubly anchored vertex")
            .value("x", x)
            .value("y", y)
            .value("y'", y1)
            .value("z", z)
            .value("a", a)
            .value("b", b)
            .value("i", i)
            .lengths(lo, hi),
    );
    certs.add_all(cycles.into_values(), Provenance::AnchoredArc);
    Ok(certs)
}
