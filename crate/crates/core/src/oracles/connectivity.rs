use std::collections::VecDeque;

use crate::graph::Graph;

/// Unit-capacity flow network on the split graph: vertex `v` becomes
/// `v_in = 2v` and `v_out = 2v + 1` joined by an arc of capacity one.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * g.n()],
        };
        for v in 0..g.n() {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, 1);
            net.arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Maximum number of internally disjoint `s`-`t` paths, stopping early
    /// once `limit` is reached. Capacities are restored afterwards.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let saved = self.cap.clone();
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.out.len()];
        while flow < limit {
            pred.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for &e in &self.out[x] {
                    let y = self.head[e];
                    if self.cap[e] > 0 && pred[y] == usize::MAX && y != source {
                        pred[y] = e;
                        if y == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != source {
                let e = pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.head[e ^ 1];
            }
            flow += 1;
        }
        self.cap = saved;
        flow
    }
}

/// Exact vertex connectivity via Menger's theorem.
///
/// Complete graphs (including `K_0` and `K_1`) get `n - 1` by convention,
/// saturating at zero. Disconnected graphs have connectivity zero.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let mut net = SplitNetwork::new(g);
    let mut best = g.min_degree();
    // Some vertex among the first best+1 lies outside a minimum separator;
    // pairing it with every non-neighbour finds that separator.
    let mut i = 0;
    while i <= best && i < n {
        for j in 0..n {
            if j != i && !g.has_edge(i, j) {
                best = best.min(net.disjoint_paths(i, j, best));
            }
        }
        i += 1;
    }
    best
}
