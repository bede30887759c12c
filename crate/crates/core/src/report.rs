//! Cycle-spectrum reports and their two serialisations.
//!
//! Text form:
//!
//! ```text
//! # pancyc spectrum report
//! version 0.1.0
//! theorem short-cycles
//! n 1001
//! k 2
//! min-degree 998
//! seed 7
//! graph-sha256 <hex>
//! range 3 12
//! gaps
//! length 3: 0 2 4 provenance=increasing-path
//! ```
//!
//! `seed` is `none` for deterministic pipelines; `gaps` lists the missing
//! lengths (possibly none). The machine form is the JSON encoding of
//! [`SpectrumReport`] with the same field names.

use std::collections::BTreeMap;
use std::fmt::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certificate::{verify_cycle, Cycle};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// The Hamilton cycle supplied with the input.
    InputHamilton,
    /// Exhaustive search.
    Oracle,
    /// Increasing path inside a BFS layer, closed through the tree.
    IncreasingPath,
    /// Second-level layering combined with a low-layer walk.
    SecondLevel,
    /// Shortened Hamilton arc closed through a bounded core.
    BridgeArc,
    /// One-vertex deletion via a good jump.
    VertexDeletion,
    /// Shrinking sequence with a protected sample.
    LongShrink,
    /// Shortened arc closed through an anchored path family.
    AnchoredArc,
}

impl Provenance {
    pub const ALL: [Provenance; 8] = [
        Provenance::InputHamilton,
        Provenance::Oracle,
        Provenance::IncreasingPath,
        Provenance::SecondLevel,
        Provenance::BridgeArc,
        Provenance::VertexDeletion,
        Provenance::LongShrink,
        Provenance::AnchoredArc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::InputHamilton => "input-hamilton",
            Provenance::Oracle => "oracle",
            Provenance::IncreasingPath => "increasing-path",
            Provenance::SecondLevel => "second-level",
            Provenance::BridgeArc => "bridge-arc",
            Provenance::VertexDeletion => "vertex-deletion",
            Provenance::LongShrink => "long-shrink",
            Provenance::AnchoredArc => "anchored-arc",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Provenance::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown provenance {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub theorem: String,
    pub n: usize,
    pub k: usize,
    pub min_degree: usize,
    pub seed: Option<u64>,
    pub graph_sha256: String,
    /// Inclusive range of lengths the report claims to cover.
    pub range: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub cycle: Cycle,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub version: String,
    pub hypothesis: Hypothesis,
    pub certificates: BTreeMap<usize, Certificate>,
    pub gaps: Vec<usize>,
}

impl SpectrumReport {
    pub fn new(hypothesis: Hypothesis) -> Self {
        let gaps = (hypothesis.range.0..=hypothesis.range.1).collect();
        SpectrumReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            hypothesis,
            certificates: BTreeMap::new(),
            gaps,
        }
    }

    pub fn has(&self, len: usize) -> bool {
        self.certificates.contains_key(&len)
    }

    /// Record a certificate after checking it against `g`. The first
    /// certificate stored for a length wins.
    pub fn insert(&mut self, g: &Graph, cycle: Cycle, provenance: Provenance) -> Result<()> {
        if let Err(e) = verify_cycle(g, &cycle) {
            return Err(Error::internal(
                provenance.as_str(),
                format!("certificate of length {} fails: {e}", cycle.len()),
            ));
        }
        let len = cycle.len();
        self.certificates
            .entry(len)
            .or_insert(Certificate { cycle, provenance });
        self.refresh_gaps();
        Ok(())
    }

    pub fn refresh_gaps(&mut self) {
        let (lo, hi) = self.hypothesis.range;
        self.gaps = (lo..=hi).filter(|l| !self.certificates.contains_key(l)).collect();
    }

    /// Drop certificates outside the claimed range.
    pub fn restrict_to_range(&mut self) {
        let (lo, hi) = self.hypothesis.range;
        self.certificates.retain(|&l, _| l >= lo && l <= hi);
        self.refresh_gaps();
    }

    pub fn to_text(&self) -> String {
        let h = &self.hypothesis;
        let mut out = String::new();
        out.push_str("# pancyc spectrum report\n");
        writeln!(out, "version {}", self.version).unwrap();
        writeln!(out, "theorem {}", h.theorem).unwrap();
        writeln!(out, "n {}", h.n).unwrap();
        writeln!(out, "k {}", h.k).unwrap();
        writeln!(out, "min-degree {}", h.min_degree).unwrap();
        match h.seed {
            Some(s) => writeln!(out, "seed {s}").unwrap(),
            None => out.push_str("seed none\n"),
        }
        writeln!(out, "graph-sha256 {}", h.graph_sha256).unwrap();
        writeln!(out, "range {} {}", h.range.0, h.range.1).unwrap();
        out.push_str("gaps");
        for g in &self.gaps {
            write!(out, " {g}").unwrap();
        }
        out.push('\n');
        for (len, cert) in &self.certificates {
            write!(out, "length {len}:").unwrap();
            for v in &cert.cycle.verts {
                write!(out, " {v}").unwrap();
            }
            writeln!(out, " provenance={}", cert.provenance).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// Parse either serialisation; JSON is recognised by a leading `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                msg: e.to_string(),
            });
        }
        parse_text(text)
    }
}

fn parse_text(text: &str) -> Result<SpectrumReport> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    let mut certificates = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("length ") {
            let (len, body) = rest
                .split_once(':')
                .ok_or_else(|| err(line_no, "missing ':' after length".into()))?;
            let len: usize = len
                .trim()
                .parse()
                .map_err(|_| err(line_no, format!("invalid length {len:?}")))?;
            let mut verts = Vec::new();
            let mut provenance = None;
            for tok in body.split_whitespace() {
                if let Some(p) = tok.strip_prefix("provenance=") {
                    provenance = Some(p.parse().map_err(|e| err(line_no, e))?);
                } else {
                    verts.push(
                        tok.parse()
                            .map_err(|_| err(line_no, format!("invalid vertex {tok:?}")))?,
                    );
                }
            }
            let provenance = provenance.ok_or_else(|| err(line_no, "missing provenance".into()))?;
            certificates.insert(
                len,
                Certificate {
                    cycle: Cycle::new(verts),
                    provenance,
                },
            );
            continue;
        }
        let (key, value) = line.split_once(' ').unwrap_or((line, ""));
        fields.insert(key, (line_no, value.trim()));
    }
    let get = |key: &str| -> Result<(usize, &str)> {
        fields
            .get(key)
            .copied()
            .ok_or_else(|| err(0, format!("missing field {key}")))
    };
    let num = |key: &str| -> Result<usize> {
        let (line, v) = get(key)?;
        v.parse().map_err(|_| err(line, format!("invalid {key} {v:?}")))
    };
    let (seed_line, seed_raw) = get("seed")?;
    let seed = match seed_raw {
        "none" => None,
        s => Some(s.parse().map_err(|_| err(seed_line, format!("invalid seed {s:?}")))?),
    };
    let (range_line, range_raw) = get("range")?;
    let range = range_raw
        .split_once(' ')
        .and_then(|(a, b)| Some((a.parse().ok()?, b.trim().parse().ok()?)))
        .ok_or_else(|| err(range_line, format!("invalid range {range_raw:?}")))?;
    let (gaps_line, gaps_raw) = get("gaps")?;
    let gaps = gaps_raw
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| err(gaps_line, format!("invalid gap {t:?}"))))
        .collect::<Result<Vec<usize>>>()?;
    Ok(SpectrumReport {
        version: get("version")?.1.to_string(),
        hypothesis: Hypothesis {
            theorem: get("theorem")?.1.to_string(),
            n: num("n")?,
            k: num("k")?,
            min_degree: num("min-degree")?,
            seed,
            graph_sha256: get("graph-sha256")?.1.to_string(),
            range,
        },
        certificates,
        gaps,
    })
}


/// Outcome of re-checking a report against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportCheck {
    pub hash_matches: bool,
    pub passed: Vec<usize>,
    pub failed: Vec<(usize, String)>,
}

impl ReportCheck {
    pub fn ok(&self) -> bool {
        self.hash_matches && self.failed.is_empty()
    }
}

/// Re-verify every certificate using only the graph-level checker.
pub fn verify_report(g: &Graph, report: &SpectrumReport) -> ReportCheck {
    let hash_matches = crate::io::graph_hash(g) == report.hypothesis.graph_sha256;
    let mut passed = Vec::new();
    let mut failed = Vec::new();
    for (&len, cert) in &report.certificates {
        let verdict = if cert.cycle.len() != len {
            Err(format!("cycle has length {}, expected {len}", cert.cycle.len()))
        } else {
            verify_cycle(g, &cert.cycle)
        };
        match verdict {
            Ok(()) => passed.push(len),
            Err(e) => failed.push((len, e)),
        }
    }
    ReportCheck {
        hash_matches,
        passed,
        failed,
    }
}
