use crate::certificate::{verify_cycle, Cycle, Interval, Jump};
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::toolbox::{scan_jump, NONE};

/// A Hamilton cycle of a growing or shrinking vertex set, with positions.
#[derive(Debug, Clone)]
pub(crate) struct CycleState {
    pub verts: Vec<usize>,
    pos: Vec<usize>,
}

impl CycleState {
    pub fn new(n: usize, verts: Vec<usize>) -> Self {
        let mut pos = vec![NONE; n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        CycleState { verts, pos }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.pos[v] != NONE
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn at(&self, p: usize) -> usize {
        self.verts[p % self.verts.len()]
    }

    pub fn cycle(&self) -> Cycle {
        Cycle::new(self.verts.clone())
    }

    fn replace(&mut self, verts: Vec<usize>) {
        for &v in &self.verts {
            self.pos[v] = NONE;
        }
        for (i, &v) in verts.iter().enumerate() {
            self.pos[v] = i;
        }
        self.verts = verts;
    }

    /// Replace the walk along the jump at `start` of length `len` by its
    /// end edge. Returns the interior vertices in cycle order.
    pub fn contract(&mut self, start: usize, len: usize) -> Vec<usize> {
        let l = self.len();
        let interior = (1..len).map(|o| self.at(start + o)).collect();
        let verts = (0..=l - len).map(|o| self.at(start + len + o)).collect();
        self.replace(verts);
        interior
    }

    /// Neighbours of `v` on the cycle.
    pub fn degree_into(&self, g: &Graph, v: usize) -> usize {
        g.neighbors(v).iter().filter(|&&u| self.contains(u)).count()
    }

    /// Insert `x` using an edge inside the successor set of its neighbours.
    pub fn absorb(&mut self, g: &Graph, x: usize, k: usize) -> Result<()> {
        let l = self.len();
        let mut plus: Vec<usize> = g
            .neighbors(x)
            .iter()
            .filter(|&&a| self.contains(a))
            .map(|&a| (self.pos[a] + 1) % l)
            .collect();
        if plus.len() < k + 1 {
            return Err(Error::Precondition(format!(
                "vertex {x} has {} neighbours on the cycle, need k + 1 = {}",
                plus.len(),
                k + 1
            )));
        }
        plus.sort_unstable();
        let mut pair = None;
        'outer: for (i, &py) in plus.iter().enumerate() {
            let y = self.verts[py];
            for &pz in &plus[i + 1..] {
                if g.has_edge(y, self.verts[pz]) {
                    pair = Some((py, pz));
                    break 'outer;
                }
            }
        }
        let Some((py, pz)) = pair else {
            let mut set: Vec<usize> = plus.iter().map(|&p| self.verts[p]).collect();
            set.sort_unstable();
            return Err(Error::violation("absorb", Witness::IndependentSet(set)));
        };
        // x, z-1 down to y, then z up around to y-1
        let mut verts = Vec::with_capacity(l + 1);
        verts.push(x);
        verts.extend(self.verts[py..pz].iter().rev());
        verts.extend(&self.verts[pz..]);
        verts.extend(&self.verts[..py]);
        self.replace(verts);
        Ok(())
    }
}

/// Extend a Hamilton cycle of `V \ {x}` (inside `g`) to one through `x`.
///
/// `h_cycle` may cover any vertex set not containing `x`; the lemma is
/// applied in the subgraph induced by that set plus `x`.
pub fn absorb_vertex(g: &Graph, h_cycle: &Cycle, x: usize, k: usize) -> Result<Cycle> {
    check_cycle(g, h_cycle)?;
    if x >= g.n() || h_cycle.verts.contains(&x) {
        return Err(Error::Precondition(format!("vertex {x} must be off the cycle")));
    }
    let mut st = CycleState::new(g.n(), h_cycle.verts.clone());
    st.absorb(g, x, k)?;
    Ok(st.cycle())
}

fn check_cycle(g: &Graph, c: &Cycle) -> Result<()> {
    verify_cycle(g, c).map_err(|e| Error::Precondition(format!("input cycle does not verify: {e}")))
}

/// What one good-jump deletion did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Removal {
    pub jump_verts: Vec<usize>,
    pub removed: usize,
    /// The other interior vertices, absorbed back in this order.
    pub absorbed: Vec<usize>,
}

/// Find a jump in each interval (in order), take the first good one,
/// contract it and absorb all interior vertices but the last.
pub(crate) fn remove_via_good_jump(
    g: &Graph,
    st: &mut CycleState,
    k: usize,
    intervals: &[Interval],
) -> Result<Removal> {
    let mut bad = Vec::new();
    for iv in intervals {
        let (a, b) = scan_jump(g, k, |o| st.at(iv.start + o))
            .map_err(|pts| Error::violation("jump", Witness::IndependentSet(pts)))?;
        let jump = Jump {
            interval: Interval::new((iv.start + a) % st.len(), b - a),
        };
        let interior: Vec<usize> = (1..jump.len()).map(|o| st.at(jump.start() + o)).collect();
        let outside_degree = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| st.contains(u) && !interior.contains(&u))
                .count()
        };
        if let Some(&v) = interior.iter().find(|&&v| outside_degree(v) < k + 1) {
            bad.push(v);
            continue;
        }
        let jump_verts: Vec<usize> = (0..=jump.len()).map(|o| st.at(jump.start() + o)).collect();
        let mut interior = st.contract(jump.start(), jump.len());
        let removed = interior.pop().expect("jumps have an interior point");
        for &v in &interior {
            st.absorb(g, v, k).map_err(|e| e.in_stage("good-jump"))?;
        }
        return Ok(Removal {
            jump_verts,
            removed,
            absorbed: interior,
        });
    }
    bad.sort_unstable();
    Err(Error::violation("good-jump", Witness::LowDegreeSystem(bad)))
}

/// A cycle on all but one vertex of the cycle `c`, inside `G[V(c)]`.
///
/// Lays `s = k^2 + k + 1` disjoint `2k`-intervals at positions
/// `j(2k + 1)` and removes one interior vertex of the first good jump.
pub fn delete_one_vertex(g: &Graph, c: &Cycle, k: usize) -> Result<Cycle> {
    check_cycle(g, c)?;
    let s = k * k + k + 1;
    if k == 0 || c.len() < (2 * k + 1) * s {
        return Err(Error::Precondition(format!(
            "vertex deletion needs k >= 1 and a cycle of length >= (2k+1)(k^2+k+1) = {}, got {}",
            (2 * k + 1) * s,
            c.len()
        )));
    }
    let intervals: Vec<Interval> = (0..s).map(|j| Interval::new(j * (2 * k + 1), 2 * k)).collect();
    let mut st = CycleState::new(g.n(), c.verts.clone());
    remove_via_good_jump(g, &mut st, k, &intervals)?;
    Ok(st.cycle())
}
