//! Polynomial building blocks: bipartite subgraphs, degree cores, colourings,
//! BFS layering, jumps and path shortening.
//!
//! Bounds of the form `alpha(G) <= k` are promises; nothing here calls an
//! oracle. A broken promise shows up as a hypothesis violation with an
//! independent set of size `k + 1` or more.

mod bfs;
mod bipartite;
mod cores;
mod paths;

pub use bfs::{bfs_layering, BfsLayering};
pub use bipartite::{bipartite_subgraph, BipartiteSub, Side};
pub use cores::{bounded_core, degeneracy_coloring, greedy_independent_set, min_degree_core, Degeneracy};
pub use paths::{find_jump, maximal_path_from, shorten_path, Walk};

pub(crate) use bfs::NONE;
pub(crate) use cores::min_degree_core_within;
pub(crate) use paths::{maximal_path_avoiding, scan_jump};
