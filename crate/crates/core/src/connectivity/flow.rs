use std::collections::VecDeque;

use super::{check_searchable, ConnectivityError};
use crate::graph::Graph;

/// Unit-capacity flow network on the split graph: vertex `x` becomes
/// `x_in = 2x` and `x_out = 2x + 1` joined by an arc of capacity 1.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> SplitNetwork {
        let n = g.order();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
        };
        let big = n as u32;
        for x in 0..n {
            let c = if x == s || x == t { big } else { 1 };
            net.arc(2 * x, 2 * x + 1, c);
        }
        for (x, y) in g.edges() {
            net.arc(2 * x + 1, 2 * y, big);
            net.arc(2 * y + 1, 2 * x, big);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Augments along shortest paths until the flow reaches `limit` or no path remains.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut seen = vec![false; self.adj.len()];
            seen[source] = true;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &arc in &self.adj[x] {
                    let y = self.head[arc];
                    if self.cap[arc] > 0 && !seen[y] {
                        seen[y] = true;
                        parent[y] = arc;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut y = sink;
            while y != source {
                let arc = parent[y];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                y = self.head[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint paths between non-adjacent `s` and `t`,
/// capped at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    assert!(
        s != t && !g.has_edge(s, t),
        "local connectivity needs a non-adjacent pair"
    );
    SplitNetwork::new(g, s, t).max_flow(2 * s + 1, 2 * t, limit)
}

/// Exact vertex connectivity.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    check_searchable(g)?;
    let n = g.order();
    let x = (0..n).min_by_key(|&u| g.degree(u)).unwrap();
    let mut best = g.degree(x);
    for y in 0..n {
        if y != x && !g.has_edge(x, y) {
            best = best.min(local_connectivity(g, x, y, best));
        }
    }
    let nbrs = g.neighbors(x).to_vec();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                best = best.min(local_connectivity(g, a, b, best));
            }
        }
    }
    Ok(best)
}
