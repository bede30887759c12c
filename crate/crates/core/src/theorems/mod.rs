mod large_n;
mod min_degree;
mod short;
mod trace;

use std::collections::BTreeMap;

use crate::certificate::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::graph_hash;
use crate::report::{Hypothesis, Provenance, SpectrumReport};

pub use large_n::pancyclic_large_n;
pub use min_degree::pancyclic_min_degree;
pub use short::{short_cycle_spectrum, short_cycle_spectrum_with, ShortOptions};
pub use trace::{PipelineOutput, PipelineTrace, StageRecord};

/// Certificates gathered across stages; the first one per length wins.
#[derive(Debug, Clone, Default)]
pub(crate) struct Certs(BTreeMap<usize, (Cycle, Provenance)>);

impl Certs {
    pub fn add(&mut self, c: Cycle, prov: Provenance) {
        self.0.entry(c.len()).or_insert((c, prov));
    }

    pub fn add_all(&mut self, cs: impl IntoIterator<Item = Cycle>, prov: Provenance) {
        for c in cs {
            self.add(c, prov);
        }
    }

    pub fn covers(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi).all(|l| self.0.contains_key(&l))
    }

    /// Map every certificate through `f` (subgraph ids to host ids).
    pub fn lift(self, f: impl Fn(&[usize]) -> Vec<usize>) -> Certs {
        Certs(
            self.0
                .into_iter()
                .map(|(l, (c, p))| (l, (Cycle::new(f(&c.verts)), p)))
                .collect(),
        )
    }

    pub fn merge(&mut self, other: Certs) {
        for (_, (c, p)) in other.0 {
            self.add(c, p);
        }
    }
}

/// Verify every certificate against `g`, keep those in `range`, and fail
/// if any length in `range` is missing.
pub(crate) fn finish(
    g: &Graph,
    theorem: &str,
    k: usize,
    seed: Option<u64>,
    range: (usize, usize),
    certs: Certs,
) -> Result<SpectrumReport> {
    let mut report = SpectrumReport::new(Hypothesis {
        theorem: theorem.to_string(),
        n: g.n(),
        k,
        min_degree: g.min_degree(),
        seed,
        graph_sha256: graph_hash(g),
        range,
    });
    for (_, (c, p)) in certs.0 {
        if c.len() >= range.0 && c.len() <= range.1 {
            report.insert(g, c, p)?;
        }
    }
    if !report.gaps.is_empty() {
        let shown: Vec<usize> = report.gaps.iter().copied().take(20).collect();
        return Err(Error::internal(
            theorem,
            format!("{} lengths uncovered, first {:?}", report.gaps.len(), shown),
        ));
    }
    Ok(report)
}
