use super::bits::{adjacency_bits, Bits};
use super::{CycleSearch, Meter, OracleBudget};
use crate::certificate::Cycle;
use crate::graph::Graph;

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<Bits>,
    unvisited: Bits,
    path: Vec<usize>,
    meter: &'a mut Meter,
}

impl Search<'_> {
    /// Every unvisited vertex needs two usable neighbours, and the unvisited
    /// part must hang together off the current end.
    fn feasible(&self, end: usize) -> bool {
        let start = self.path[0];
        let mut usable = self.unvisited.clone();
        usable.insert(end);
        usable.insert(start);
        for w in self.unvisited.iter() {
            if self.adj[w].and_count(&usable) < 2 {
                return false;
            }
        }
        let first = match self.unvisited.iter().next() {
            Some(v) => v,
            None => return true,
        };
        let mut seen = Bits::new(self.g.n());
        seen.insert(first);
        let mut stack = vec![first];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in self.adj[x].and(&self.unvisited).iter() {
                if !seen.contains(y) {
                    seen.insert(y);
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.unvisited.count() && self.adj[end].intersects(&self.unvisited)
    }

    fn go(&mut self) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let end = *self.path.last().unwrap();
        if self.unvisited.is_empty() {
            return self.path.len() >= 3 && self.g.has_edge(end, self.path[0]);
        }
        if !self.feasible(end) {
            return false;
        }
        // fewest onward options first, lowest id on ties
        let mut next: Vec<(usize, usize)> = self.adj[end]
            .and(&self.unvisited)
            .iter()
            .map(|w| (self.adj[w].and_count(&self.unvisited), w))
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            self.unvisited.remove(w);
            self.path.push(w);
            if self.go() {
                return true;
            }
            self.path.pop();
            self.unvisited.insert(w);
            if self.meter.exceeded() {
                return false;
            }
        }
        false
    }
}

/// Backtracking Hamilton cycle search from vertex 0.
pub fn find_hamilton_cycle(g: &Graph, budget: &OracleBudget) -> CycleSearch {
    let n = g.n();
    let mut meter = Meter::new(budget);
    if n < 3 {
        return CycleSearch::Absent { nodes: 0 };
    }
    let mut unvisited = Bits::full(n);
    unvisited.remove(0);
    let mut search = Search {
        g,
        adj: adjacency_bits(g),
        unvisited,
        path: vec![0],
        meter: &mut meter,
    };
    let ok = search.go();
    let path = std::mem::take(&mut search.path);
    if ok {
        CycleSearch::Found(Cycle::new(path))
    } else if meter.exceeded() {
        CycleSearch::Aborted { nodes: meter.nodes() }
    } else {
        CycleSearch::Absent { nodes: meter.nodes() }
    }
}
