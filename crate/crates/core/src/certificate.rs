//! Path and cycle certificates and their independent checkers.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A path given by its vertex sequence. Its length is the number of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    pub verts: Vec<usize>,
}

impl Path {
    pub fn new(verts: Vec<usize>) -> Self {
        Path { verts }
    }

    pub fn len(&self) -> usize {
        self.verts.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn start(&self) -> usize {
        self.verts[0]
    }

    pub fn end(&self) -> usize {
        *self.verts.last().expect("non-empty path")
    }

    pub fn reversed(&self) -> Path {
        let mut verts = self.verts.clone();
        verts.reverse();
        Path { verts }
    }
}

/// A cycle given by its vertex sequence; the closing edge is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    pub verts: Vec<usize>,
}

impl Cycle {
    pub fn new(verts: Vec<usize>) -> Self {
        Cycle { verts }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Position of every vertex on the cycle, indexed by vertex id.
    pub(crate) fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.verts.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// The arc from position `from` forward to position `to`, inclusive.
    pub fn arc(&self, from: usize, to: usize) -> Path {
        let len = self.len();
        let steps = (to + len - from) % len;
        Path::new((0..=steps).map(|i| self.verts[(from + i) % len]).collect())
    }

    /// The longer of the two arcs joining positions `a` and `b`, oriented
    /// from `a` to `b`. Ties pick the forward arc.
    pub fn longer_arc(&self, a: usize, b: usize) -> Path {
        let forward = self.arc(a, b);
        if 2 * forward.len() >= self.len() {
            forward
        } else {
            self.arc(b, a).reversed()
        }
    }
}

/// `t + 1` consecutive points starting at `start` on a path or cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub start: usize,
    pub len: usize,
}

impl Interval {
    pub fn new(start: usize, len: usize) -> Self {
        Interval { start, len }
    }

    /// Host position of the point `offset` steps into the interval.
    #[inline]
    pub fn position(&self, offset: usize, host_points: usize, wrap: bool) -> usize {
        let p = self.start + offset;
        if wrap {
            p % host_points
        } else {
            p
        }
    }

    pub fn fits(&self, host_points: usize, wrap: bool) -> bool {
        if wrap {
            self.len < host_points
        } else {
            self.start + self.len < host_points
        }
    }
}

/// An interval of length at least 2 whose two ends are adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Jump {
    pub interval: Interval,
}

impl Jump {
    pub fn start(&self) -> usize {
        self.interval.start
    }

    pub fn len(&self) -> usize {
        self.interval.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Host positions of the interior points.
    pub fn interior_positions(&self, host_points: usize, wrap: bool) -> Vec<usize> {
        (1..self.interval.len)
            .map(|o| self.interval.position(o, host_points, wrap))
            .collect()
    }
}

/// Check that `p` is a path in `g`. Returns the first failure found.
pub fn verify_path(g: &Graph, p: &Path) -> Result<(), String> {
    check_sequence(g, &p.verts, false)
}

/// Check that `c` is a cycle of length at least 3 in `g`.
pub fn verify_cycle(g: &Graph, c: &Cycle) -> Result<(), String> {
    if c.verts.len() < 3 {
        return Err(format!("cycle has {} vertices, need at least 3", c.verts.len()));
    }
    check_sequence(g, &c.verts, true)
}

fn check_sequence(g: &Graph, verts: &[usize], closed: bool) -> Result<(), String> {
    if verts.is_empty() {
        return Err("empty vertex sequence".into());
    }
    let n = g.n();
    let mut seen = vec![false; n];
    for (i, &v) in verts.iter().enumerate() {
        if v >= n {
            return Err(format!("vertex {v} at position {i} out of range"));
        }
        if seen[v] {
            return Err(format!("vertex {v} repeated at position {i}"));
        }
        seen[v] = true;
    }
    for w in verts.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(format!("{} - {} is not an edge", w[0], w[1]));
        }
    }
    if closed {
        let (first, last) = (verts[0], verts[verts.len() - 1]);
        if !g.has_edge(last, first) {
            return Err(format!("closing pair {last} - {first} is not an edge"));
        }
    }
    Ok(())
}
