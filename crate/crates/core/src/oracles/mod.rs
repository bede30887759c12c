//! Exact exponential-time ground truth for small graphs.
//!
//! Every search is deterministic: branching order and tie-breaks depend only
//! on vertex ids and degrees, so a fixed node budget aborts at the same point
//! on every run.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

mod bits;
mod connectivity;
mod cycles;
mod hamilton;
mod independence;

pub use connectivity::vertex_connectivity;
pub use cycles::{cycle_spectrum, find_cycle_of_length, OracleSpectrum};
pub use hamilton::find_hamilton_cycle;
pub use independence::{independence_number, maximum_independent_set};

use crate::certificate::Cycle;

/// Search limits. Exceeding either limit aborts the search with an explicit
/// outcome; an aborted search never reports an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl OracleBudget {
    pub fn unlimited() -> Self {
        OracleBudget {
            node_limit: None,
            time_limit: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        OracleBudget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget::nodes(200_000_000)
    }
}

/// Counts search nodes against a budget.
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
    exceeded: bool,
}

impl Meter {
    pub fn new(budget: &OracleBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit.unwrap_or(u64::MAX),
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            exceeded: false,
        }
    }

    /// Count one node. Returns `false` once the budget is exhausted.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            self.exceeded = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exceeded = true;
                }
            }
        }
        !self.exceeded
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn exceeded(&self) -> bool {
        self.exceeded
    }
}

/// Result of a cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleSearch {
    Found(Cycle),
    /// The search space was exhausted after visiting `nodes` nodes.
    Absent {
        nodes: u64,
    },
    /// The budget ran out after `nodes` nodes; nothing is known.
    Aborted {
        nodes: u64,
    },
}

impl CycleSearch {
    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            CycleSearch::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, CycleSearch::Absent { .. })
    }
}

/// Independence search that hit its budget, with the bounds known so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Aborted {
    pub nodes: u64,
    pub lower: usize,
    pub upper: usize,
}

impl std::fmt::Display for Aborted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "budget exceeded after {} nodes (bounds {}..={})",
            self.nodes, self.lower, self.upper
        )
    }
}
