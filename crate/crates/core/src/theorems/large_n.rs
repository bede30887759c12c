use crate::certificate::{verify_cycle, Cycle, Interval};
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::lemmas::{bridge_cycles, delete_one_vertex, remove_via_good_jump, CycleState};
use crate::report::Provenance;
use crate::rng::RandomSource;
use crate::toolbox::bounded_core;

use super::short::{short_cycles, ShortOptions};
use super::{finish, Certs, PipelineOutput, PipelineTrace, StageRecord};

/// Seed of the internal short-cycle run; the pipeline takes no randomness.
const CORE_SEED: u64 = 0;

/// Certified cycles of every length in `3..=n` for a Hamiltonian graph on
/// `n >= 150k^3` vertices with independence number at most `k`.
pub fn pancyclic_large_n(g: &Graph, c: &Cycle, k: usize) -> Result<PipelineOutput> {
    let n = g.n();
    if k < 2 || n < 150 * k * k * k {
        return Err(Error::Precondition(format!(
            "pan-n needs k >= 2 and n >= 150k^3 (n = {n}, k = {k})"
        )));
    }
    check_hamilton(g, c)?;
    let mut trace = PipelineTrace::new("pan-n", k, None);
    let certs = large_n_certs(g, c, k, &mut trace)?;
    let report = finish(g, "pan-n", k, None, (3, n), certs)?;
    Ok(PipelineOutput { report, trace })
}

pub(crate) fn check_hamilton(g: &Graph, c: &Cycle) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::Precondition(format!(
            "cycle has length {}, expected n = {}",
            c.len(),
            g.n()
        )));
    }
    verify_cycle(g, c).map_err(|e| Error::Precondition(format!("Hamilton cycle does not verify: {e}")))
}

pub(crate) fn large_n_certs(g: &Graph, c: &Cycle, k: usize, trace: &mut PipelineTrace) -> Result<Certs> {
    let n = g.n();
    let mut certs = Certs::default();
    certs.add(c.clone(), Provenance::InputHamilton);

    // G_n, ..., G_{n - 20k^2}, never deleting a protected anchor
    let steps = 20 * k * k;
    let s = k * k + k + 1;
    let mut st = CycleState::new(n, c.verts.clone());
    let mut protected = vec![false; n];
    let mut removed = Vec::with_capacity(steps);
    let mut anchors = Vec::with_capacity(2 * steps);
    for step in 0..steps {
        let intervals = pack_intervals(&st, &protected, k, s).ok_or_else(|| {
            Error::violation(
                format!("pan-n/intervals/step-{step}"),
                Witness::Note(format!("fewer than {s} disjoint {}-intervals avoid the anchors", 2 * k)),
            )
        })?;
        let rem = remove_via_good_jump(g, &mut st, k, &intervals).map_err(|e| e.in_stage("pan-n/shrink"))?;
        let v = rem.removed;
        let pair: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| st.contains(u))
            .take(2)
            .collect();
        if pair.len() < 2 {
            return Err(Error::internal(
                "pan-n/shrink",
                format!("removed vertex {v} has fewer than 2 anchors"),
            ));
        }
        for &a in &pair {
            protected[a] = true;
        }
        anchors.extend(pair);
        removed.push(v);
    }
    let c_prime = st.cycle();
    trace.push(
        StageRecord::new("shrink", "removed 20k^2 vertices with protected anchors")
            .value("steps", steps)
            .value("n'", c_prime.len())
            .set("S", removed.clone())
            .set("anchors", anchors),
    );

    let br = bridge_cycles(g, &c_prime, &removed, k).map_err(|e| e.in_stage("pan-n"))?;
    trace.push(
        StageRecord::new("bridge", "A = V(G'), B = S")
            .value("x", br.x)
            .value("y", br.y)
            .value("a", br.a)
            .value("b", br.b)
            .value("m", br.m)
            .set("H", br.core.clone())
            .lengths(br.range.0, br.range.1),
    );
    let mid_top = br.range.1;
    certs.add_all(br.cycles.into_values(), Provenance::BridgeArc);

    // n - 1 down to |V(G')|/2 by single deletions from G
    let mut cur = c.clone();
    while cur.len() > mid_top {
        cur = delete_one_vertex(g, &cur, k).map_err(|e| e.in_stage("pan-n/deletion"))?;
        certs.add(cur.clone(), Provenance::VertexDeletion);
    }
    trace.push(StageRecord::new("deletion", "repeated one-vertex deletion").lengths(mid_top, n - 1));

    // short lengths inside an induced subgraph of minimum degree >= 300k - 1
    let core = bounded_core(g, 300 * k - 1, k).map_err(|e| e.in_stage("pan-n/core"))?;
    let sub = g.induced_subgraph(&core)?;
    let top = sub.graph.min_degree() / 81;
    let mut inner = PipelineTrace::new("short-cycles", k, Some(CORE_SEED));
    let mut rng = RandomSource::new(CORE_SEED);
    let short = short_cycles(&sub.graph, k, top, &mut rng, ShortOptions::default(), &mut inner)
        .map_err(|e| e.in_stage("pan-n/core"))?;
    trace.push(
        StageRecord::new("core", "bounded core at 300k - 1")
            .value("seed", CORE_SEED as usize)
            .set("G*", core.clone())
            .lengths(3, top),
    );
    for rec in inner.stages {
        trace.push(lift_record(rec, "core/", |v| sub.host_id(v)));
    }
    certs.merge(short.lift(|vs| sub.lift(vs)));
    Ok(certs)
}

/// Rename a stage and map its vertex ids into the host graph.
pub(crate) fn lift_record(mut rec: StageRecord, prefix: &str, f: impl Fn(usize) -> usize) -> StageRecord {
    rec.stage = format!("{prefix}{}", rec.stage);
    for vs in rec.sets.values_mut() {
        for v in vs.iter_mut() {
            *v = f(*v);
        }
        vs.sort_unstable();
    }
    for (key, v) in rec.values.iter_mut() {
        if matches!(key.as_str(), "x" | "y" | "x*" | "y*") {
            *v = f(*v);
        }
    }
    rec
}

/// The first `s` disjoint `2k`-intervals, in cycle order, inside the
/// stretches between protected points.
fn pack_intervals(st: &CycleState, protected: &[bool], k: usize, s: usize) -> Option<Vec<Interval>> {
    let l = st.len();
    let width = 2 * k + 1;
    let marks: Vec<usize> = (0..l).filter(|&p| protected[st.at(p)]).collect();
    let stretches: Vec<(usize, usize)> = if marks.is_empty() {
        vec![(0, l)]
    } else {
        (0..marks.len())
            .map(|j| {
                let a = marks[j];
                let b = marks[(j + 1) % marks.len()];
                let gap = match (b + l - a) % l {
                    0 => l,
                    d => d,
                };
                (a + 1, gap - 1)
            })
            .collect()
    };
    let mut out = Vec::with_capacity(s);
    for (start, points) in stretches {
        for t in 0..points / width {
            if out.len() == s {
                return Some(out);
            }
            out.push(Interval::new((start + t * width) % l, 2 * k));
        }
    }
    (out.len() == s).then_some(out)
}
