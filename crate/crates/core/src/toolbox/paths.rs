use crate::certificate::{Cycle, Interval, Jump, Path};
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;

/// A path or cycle whose consecutive points host intervals and jumps.
#[derive(Debug, Clone, Copy)]
pub enum Walk<'a> {
    Path(&'a Path),
    Cycle(&'a Cycle),
}

impl Walk<'_> {
    fn verts(&self) -> &[usize] {
        match self {
            Walk::Path(p) => &p.verts,
            Walk::Cycle(c) => &c.verts,
        }
    }

    fn wraps(&self) -> bool {
        matches!(self, Walk::Cycle(_))
    }
}

impl<'a> From<&'a Path> for Walk<'a> {
    fn from(p: &'a Path) -> Self {
        Walk::Path(p)
    }
}

impl<'a> From<&'a Cycle> for Walk<'a> {
    fn from(c: &'a Cycle) -> Self {
        Walk::Cycle(c)
    }
}

/// Among the points at offsets `0, 2, ..., 2k`, the lexicographically first
/// adjacent pair of offset indices, or the scanned points if they are
/// independent.
#[inline]
pub(crate) fn scan_jump(
    g: &Graph,
    k: usize,
    point: impl Fn(usize) -> usize,
) -> std::result::Result<(usize, usize), Vec<usize>> {
    for i in 0..=k {
        let u = point(2 * i);
        for j in i + 1..=k {
            if g.has_edge(u, point(2 * j)) {
                return Ok((2 * i, 2 * j));
            }
        }
    }
    let mut pts: Vec<usize> = (0..=k).map(|i| point(2 * i)).collect();
    pts.sort_unstable();
    Err(pts)
}

/// A jump of length between 2 and `2k` inside `interval`, taken from the
/// points at even offsets. Fails with the `k + 1` scanned points when they
/// are independent.
pub fn find_jump<'a>(g: &Graph, host: impl Into<Walk<'a>>, interval: Interval, k: usize) -> Result<Jump> {
    let host = host.into();
    let verts = host.verts();
    let wrap = host.wraps();
    if k == 0 || interval.len < 2 * k || !interval.fits(verts.len(), wrap) {
        return Err(Error::Precondition(format!(
            "jump search needs k >= 1 and an interval of length >= 2k = {} on the walk, got {:?}",
            2 * k,
            interval
        )));
    }
    let point = |o: usize| verts[interval.position(o, verts.len(), wrap)];
    match scan_jump(g, k, point) {
        Ok((a, b)) => Ok(Jump {
            interval: Interval::new(interval.position(a, verts.len(), wrap), b - a),
        }),
        Err(pts) => Err(Error::violation("jump", Witness::IndependentSet(pts))),
    }
}

/// A path with the same ends as `p` and length in `[q, q + 2k - 2]`, using
/// only vertices of `p`. Jumps are taken repeatedly in the first
/// `2k`-interval from the start of the path.
pub fn shorten_path(g: &Graph, p: &Path, q: usize, k: usize) -> Result<Path> {
    if k == 0 || q == 0 || q > p.len() {
        return Err(Error::Precondition(format!(
            "shortening needs k >= 1 and 1 <= q <= {} (q = {q}, k = {k})",
            p.len()
        )));
    }
    // reversed, so the working front of the path is the end of the vector
    let mut rev: Vec<usize> = p.verts.iter().rev().copied().collect();
    while rev.len() - 1 > q + 2 * k - 2 {
        let top = rev.len() - 1;
        let (a, b) = scan_jump(g, k, |o| rev[top - o])
            .map_err(|pts| Error::violation("shorten", Witness::IndependentSet(pts)))?;
        // keep points at offsets 0..=a and b.., dropping the interior
        let head: Vec<usize> = rev[top - a..].to_vec();
        rev.truncate(top - b + 1);
        rev.extend(head);
    }
    rev.reverse();
    Ok(Path::new(rev))
}

/// Greedy path from `x`: repeatedly step to the lowest-id neighbour not yet
/// used, stopping when the end has no unused neighbour.
pub fn maximal_path_from(g: &Graph, x: usize) -> Path {
    maximal_path_avoiding(g, x, &[])
}

/// [`maximal_path_from`] that never enters `blocked`.
pub(crate) fn maximal_path_avoiding(g: &Graph, x: usize, blocked: &[usize]) -> Path {
    let mut used = vec![false; g.n()];
    for &b in blocked {
        used[b] = true;
    }
    used[x] = true;
    let mut verts = vec![x];
    let mut cur = x;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| !used[w]) {
        used[next] = true;
        verts.push(next);
        cur = next;
    }
    Path::new(verts)
}
