mod absorb;
mod bridge;
mod consecutive;
mod efrs;
mod long;

pub use absorb::{absorb_vertex, delete_one_vertex};
pub use bridge::{bridge_cycles, bridge_lower_bound, BridgeCycles};
pub use consecutive::{consecutive_paths, ConsecutivePathsResult};
pub use efrs::{efrs_dichotomy, EfrsOutcome, IncreasingPathColoring};
pub use long::{long_cycles, LongCycles};

pub(crate) use absorb::{remove_via_good_jump, CycleState};
pub(crate) use bridge::close_through_paths;
pub(crate) use consecutive::consecutive_paths_with;
