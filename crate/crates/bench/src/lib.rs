//! Benchmark fixtures; see `benches/pipelines.rs`.

use pancyc::generators::{generate_power_complement, known_hamilton_cycle_power_complement};
use pancyc::{Cycle, Graph};

/// A power-complement graph with its stride Hamilton cycle.
pub fn power_complement(n: usize, p: usize) -> (Graph, Cycle) {
    let g = generate_power_complement(n, p).expect("valid parameters");
    let c = known_hamilton_cycle_power_complement(n, p).expect("stride cycle closes");
    (g, c)
}
