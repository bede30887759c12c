use super::bits::{adjacency_bits, Bits};
use super::{Aborted, Meter, OracleBudget};
use crate::graph::Graph;

struct Search<'a> {
    adj: &'a [Bits],
    meter: Meter,
    best: Vec<usize>,
    current: Vec<usize>,
}

/// Size of a first-fit clique cover of `G[cand]` in id order; an upper
/// bound on the independence number of `G[cand]`.
fn clique_cover_bound(adj: &[Bits], cand: &Bits) -> usize {
    let mut classes: Vec<Bits> = Vec::new();
    for v in cand.iter() {
        match classes.iter_mut().find(|c| c.and_not(&adj[v]).is_empty()) {
            Some(c) => c.insert(v),
            None => {
                let mut c = Bits::new(adj.len());
                c.insert(v);
                classes.push(c);
            }
        }
    }
    classes.len()
}

impl Search<'_> {
    fn run(&mut self, cand: Bits) {
        if !self.meter.tick() {
            return;
        }
        let size = self.current.len();
        if cand.is_empty() {
            if size > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if size + clique_cover_bound(self.adj, &cand) <= self.best.len() {
            return;
        }
        // branch on the max-degree vertex of G[cand], lowest id on ties
        let mut pick = usize::MAX;
        let mut pick_deg = 0;
        for v in cand.iter() {
            let d = self.adj[v].and_count(&cand);
            if pick == usize::MAX || d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        if pick_deg == 0 {
            if size + cand.count() > self.best.len() {
                self.best = self.current.iter().copied().chain(cand.iter()).collect();
            }
            return;
        }
        let mut rest = cand.and_not(&self.adj[pick]);
        rest.remove(pick);
        self.current.push(pick);
        self.run(rest);
        self.current.pop();
        if self.meter.exceeded() {
            return;
        }
        let mut without = cand;
        without.remove(pick);
        self.run(without);
    }
}

/// A maximum independent set, sorted ascending.
pub fn maximum_independent_set(g: &Graph, budget: &OracleBudget) -> Result<Vec<usize>, Aborted> {
    let adj = adjacency_bits(g);
    let all = Bits::full(g.n());
    let upper = clique_cover_bound(&adj, &all);
    let mut search = Search {
        adj: &adj,
        meter: Meter::new(budget),
        best: Vec::new(),
        current: Vec::new(),
    };
    search.run(all);
    if search.meter.exceeded() {
        return Err(Aborted {
            nodes: search.meter.nodes(),
            lower: search.best.len(),
            upper,
        });
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Exact independence number by branch and bound.
pub fn independence_number(g: &Graph, budget: &OracleBudget) -> Result<usize, Aborted> {
    maximum_independent_set(g, budget).map(|s| s.len())
}
