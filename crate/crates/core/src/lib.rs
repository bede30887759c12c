//! Certificate-producing cycle-length constructions for graphs whose
//! independence number is small compared to their minimum degree or order.
//!
//! Every construction returns explicit vertex sequences that can be checked
//! with [`verify_cycle`] / [`verify_path`] against the input graph. Where an
//! algorithm relies on a promised bound `alpha(G) <= k`, failure of that
//! promise surfaces as [`Error::HypothesisViolation`] carrying a witness,
//! typically an independent set of size `k + 1`.
//!
//! Layout:
//! - [`graph`], [`certificate`], [`generators`], [`io`], [`report`], [`rng`]:
//!   shared types and plumbing.
//! - [`oracles`]: exact exponential-time ground truth for small graphs.
//! - [`toolbox`]: the polynomial building blocks (bipartite subgraphs,
//!   cores, BFS layering, jumps, path shortening).
//! - [`lemmas`]: absorption, vertex deletion, layer dichotomy, consecutive
//!   path lengths, bridge cycles and long cycles.
//! - [`theorems`]: the three end-to-end spectrum pipelines.

pub mod certificate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod oracles;
pub mod report;
pub mod rng;
pub mod theorems;
pub mod toolbox;

pub use certificate::{verify_cycle, verify_path, Cycle, Interval, Jump, Path};
pub use error::{Error, Result, Witness};
pub use graph::{Graph, Subgraph};
pub use report::{Provenance, SpectrumReport};
pub use rng::RandomSource;
