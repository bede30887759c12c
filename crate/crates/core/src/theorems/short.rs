use crate::certificate::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lemmas::consecutive_paths;
use crate::report::Provenance;
use crate::rng::RandomSource;
use crate::toolbox::{bipartite_subgraph, BipartiteSub};

use super::{finish, Certs, PipelineOutput, PipelineTrace, StageRecord};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ShortOptions {
    /// Run the second level even when the first already covers the range,
    /// and prefer its certificates.
    pub force_second_level: bool,
}

/// Certified cycles of every length in `3..=floor(delta/81)` for a graph
/// with minimum degree `delta >= 300k` and independence number at most `k`.
pub fn short_cycle_spectrum(g: &Graph, k: usize, rng: &mut RandomSource) -> Result<PipelineOutput> {
    short_cycle_spectrum_with(g, k, rng, ShortOptions::default())
}

pub fn short_cycle_spectrum_with(
    g: &Graph,
    k: usize,
    rng: &mut RandomSource,
    opts: ShortOptions,
) -> Result<PipelineOutput> {
    let d = g.min_degree();
    if k == 0 || d < 300 * k {
        return Err(Error::Precondition(format!(
            "short cycles need k >= 1 and min degree >= 300k = {} (min degree {d})",
            300 * k
        )));
    }
    let top = d / 81;
    let seed = rng.seed();
    let mut trace = PipelineTrace::new("short-cycles", k, Some(seed));
    let certs = short_cycles(g, k, top, rng, opts, &mut trace)?;
    let report = finish(g, "short-cycles", k, Some(seed), (3, top), certs)?;
    Ok(PipelineOutput { report, trace })
}

/// The construction behind [`short_cycle_spectrum`], without the degree
/// check, certifying `3..=top`.
pub(crate) fn short_cycles(
    g: &Graph,
    k: usize,
    top: usize,
    rng: &mut RandomSource,
    opts: ShortOptions,
    trace: &mut PipelineTrace,
) -> Result<Certs> {
    let d = g.min_degree();
    let b = bipartite_subgraph(g);
    let x = 0;
    let r = consecutive_paths(g, &b, x, k).map_err(|e| e.in_stage("short/first-level"))?;
    let nm = r.layering.layer(r.m).len();
    let mut certs = Certs::default();
    certs.add_all(r.cycles.values().cloned(), Provenance::IncreasingPath);
    trace.push(
        StageRecord::new("first-level", "layer cycles")
            .value("d_B", b.min_degree)
            .value("x", x)
            .value("m", r.m)
            .value("|N_m|", nm)
            .lengths(3, nm / k),
    );
    if certs.covers(3, top) && !opts.force_second_level {
        return Ok(certs);
    }

    // keep ceil(d/9) neighbours in N'_{m+1} per vertex of N'_m
    let core = &r.core;
    let keep = d.div_ceil(9);
    let mut kept = vec![false; g.n()];
    for &v in &core.x {
        let nb = core.graph.neighbors(v);
        if nb.len() < keep {
            return Err(Error::internal(
                "short/trim",
                format!("vertex {v} has {} < d/9 core neighbours", nb.len()),
            ));
        }
        for &w in &nb[..keep] {
            kept[w] = true;
        }
    }
    let upper: Vec<usize> = core.y.iter().copied().filter(|&w| kept[w]).collect();
    trace.push(
        StageRecord::new("trim", "kept d/9 neighbours per vertex")
            .value("keep", keep)
            .value("|N'_m|", core.x.len())
            .value("|N'_m+1|", upper.len()),
    );

    let (in_p, attempts) = rng.retry("short/partition", |rs| {
        let mut in_p = vec![false; g.n()];
        for &v in &core.x {
            in_p[v] = rs.bernoulli(1, 2);
        }
        let balanced = upper.iter().all(|&w| {
            let nb = core.graph.neighbors(w);
            let p = nb.iter().filter(|&&v| in_p[v]).count();
            36 * p >= d && 36 * (nb.len() - p) >= d
        });
        balanced.then_some(in_p)
    })?;
    let p_set: Vec<usize> = core.x.iter().copied().filter(|&v| in_p[v]).collect();
    trace.push(
        StageRecord::new("partition", "every kept vertex sees d/36 on each side")
            .value("attempts", attempts)
            .set("P", p_set.clone()),
    );

    let bstar = BipartiteSub::from_parts(&core.graph, &p_set, &upper)?;
    if 36 * bstar.min_degree < d {
        return Err(Error::internal(
            "short/second-level",
            "B* has minimum degree below d/36",
        ));
    }
    let xs = p_set[0];
    let r2 = consecutive_paths(g, &bstar, xs, k).map_err(|e| e.in_stage("short/second-level"))?;
    certs.add_all(r2.cycles.values().cloned(), Provenance::IncreasingPath);
    let y = r2.y;
    let ys = if in_p[y] {
        y
    } else {
        *core
            .graph
            .neighbors(y)
            .iter()
            .find(|&&v| !in_p[v])
            .ok_or_else(|| Error::internal("short/second-level", format!("{y} has no neighbour in Q")))?
    };

    // W: x* up to the common ancestor and down to y*, through layers below m
    let t = &r.layering;
    let top_anc = t.lca(xs, ys);
    let mut w = t.path_up(xs, t.depth[top_anc]);
    let mut down = t.path_up(ys, t.depth[top_anc]);
    down.pop();
    w.extend(down.iter().rev());
    let w_len = w.len() - 1;
    let mut second = Certs::default();
    let mut lo = usize::MAX;
    let mut hi = 0;
    for p in r2.paths.values() {
        let mut verts = p.verts.clone();
        if ys != y {
            verts.push(ys);
        }
        let mut cyc = w.clone();
        cyc.extend(verts[1..verts.len() - 1].iter().rev());
        lo = lo.min(cyc.len());
        hi = hi.max(cyc.len());
        second.add(Cycle::new(cyc), Provenance::SecondLevel);
    }
    trace.push(
        StageRecord::new("second-level", "W combined with x*-y* paths")
            .value("x*", xs)
            .value("y", y)
            .value("y*", ys)
            .value("m*", r2.m)
            .value("|N*_m*|", r2.layering.layer(r2.m).len())
            .value("W", w_len)
            .lengths(lo, hi),
    );
    if opts.force_second_level {
        second.merge(certs);
        return Ok(second);
    }
    certs.merge(second);
    Ok(certs)
}
