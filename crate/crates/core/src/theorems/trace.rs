use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::certificate::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::SpectrumReport;
use crate::rng::RandomSource;

/// One step of a pipeline: what it chose and what came out.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub stage: String,
    pub outcome: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, Vec<usize>>,
    /// Inclusive range of cycle lengths this stage certified.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lengths: Option<(usize, usize)>,
}

impl StageRecord {
    pub fn new(stage: impl Into<String>, outcome: impl Into<String>) -> Self {
        StageRecord {
            stage: stage.into(),
            outcome: outcome.into(),
            ..Default::default()
        }
    }

    pub fn value(mut self, key: &str, v: usize) -> Self {
        self.values.insert(key.to_string(), v);
        self
    }

    pub fn set(mut self, key: &str, mut vs: Vec<usize>) -> Self {
        vs.sort_unstable();
        self.sets.insert(key.to_string(), vs);
        self
    }

    pub fn lengths(mut self, lo: usize, hi: usize) -> Self {
        self.lengths = Some((lo, hi));
        self
    }
}

/// Ordered log of a pipeline run, sufficient to rerun it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub theorem: String,
    pub k: usize,
    pub seed: Option<u64>,
    pub stages: Vec<StageRecord>,
}

impl PipelineTrace {
    pub fn new(theorem: &str, k: usize, seed: Option<u64>) -> Self {
        PipelineTrace {
            theorem: theorem.to_string(),
            k,
            seed,
            stages: Vec::new(),
        }
    }

    pub fn push(&mut self, rec: StageRecord) {
        self.stages.push(rec);
    }

    /// The first stage whose name is `name`.
    pub fn stage(&self, name: &str) -> Option<&StageRecord> {
        self.stages.iter().find(|s| s.stage == name)
    }

    pub fn has_stage(&self, name: &str) -> bool {
        self.stage(name).is_some()
    }

    /// Every recorded vertex is below `n`.
    pub fn vertices_within(&self, n: usize) -> bool {
        self.stages.iter().all(|s| {
            s.sets.values().flatten().all(|&v| v < n) && s.values.iter().all(|(key, &v)| !is_vertex_key(key) || v < n)
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("traces serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    /// Rerun the recorded pipeline with the recorded `k` and seed.
    pub fn replay(&self, g: &Graph, c: Option<&Cycle>) -> Result<PipelineOutput> {
        let need_cycle = || c.ok_or_else(|| Error::Input(format!("{} needs a Hamilton cycle", self.theorem)));
        let mut rng = RandomSource::new(self.seed.unwrap_or(0));
        match self.theorem.as_str() {
            "short-cycles" => super::short_cycle_spectrum(g, self.k, &mut rng),
            "pan-n" => super::pancyclic_large_n(g, need_cycle()?, self.k),
            "pan-mindeg" => super::pancyclic_min_degree(g, need_cycle()?, self.k, &mut rng),
            other => Err(Error::Input(format!("unknown theorem {other:?} in trace"))),
        }
    }
}

/// Keys holding a single vertex id rather than a count.
fn is_vertex_key(key: &str) -> bool {
    matches!(key, "x" | "y" | "z" | "a" | "b" | "y0" | "y'" | "x*" | "y*")
}

/// A certified report together with the trace that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOutput {
    pub report: SpectrumReport,
    pub trace: PipelineTrace,
}
