//! Vertex connectivity by unit-capacity max flow on the vertex-split digraph.

use std::collections::VecDeque;

use super::Graph;

struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, u: usize, v: usize, c: u32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Number of augmenting paths found, stopping once `limit` is reached.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.head.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            queue.clear();
            queue.push_back(source);
            via[source] = usize::MAX - 1;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &a in &self.head[u] {
                    let w = self.to[a];
                    if self.cap[a] > 0 && via[w] == usize::MAX {
                        via[w] = a;
                        queue.push_back(w);
                    }
                }
            }
            if via[sink] == usize::MAX {
                break;
            }
            let mut v = sink;
            while v != source {
                let a = via[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for non-adjacent `s ≠ t`,
/// capped at `limit`.
pub(super) fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1, 1);
    }
    for &(u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, 1);
        net.arc(2 * v + 1, 2 * u, 1);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// `κ(G)`, with `κ(K_n) = n − 1` and `κ = 0` for disconnected graphs.
pub(super) fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    // Some vertex among the first κ+1 lies outside a minimum separator, and
    // pairing it with every later non-neighbour reaches the separator.
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_examples() {
        assert_eq!(Graph::cycle(6).unwrap().vertex_connectivity(), 2);
        assert_eq!(Graph::complete(4).vertex_connectivity(), 3);
        assert_eq!(Graph::complete(1).vertex_connectivity(), 0);
        assert_eq!(Graph::empty(3).vertex_connectivity(), 0);
        assert_eq!(Graph::path(4).vertex_connectivity(), 1);
        assert_eq!(Graph::complete_bipartite(3, 4).vertex_connectivity(), 3);
    }

    #[test]
    fn local_paths_in_cycle() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(local_connectivity(&c6, 0, 3, usize::MAX), 2);
        assert_eq!(local_connectivity(&c6, 0, 3, 1), 1);
    }
}
