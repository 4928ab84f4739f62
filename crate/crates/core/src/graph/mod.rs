//! Simple undirected graphs on dense `0..n` vertex ids.

mod connectivity;
mod generators;
pub mod io;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use generators::{random_graph, random_regular};

/// Unordered vertex pair, always stored with the smaller id first.
pub type Edge = (usize, usize);

pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Strictly increasing list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut ids = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            ids.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(ids)
    }

    /// `None` if some id does not fit in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &v| (v < 64).then(|| acc | (1u64 << v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple graph. Edges are kept sorted lexicographically and every
/// adjacency list is sorted, so iteration order is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "duplicate edge ({},{})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_edges(n, list))
    }

    /// Like [`Graph::new`] but silently drops duplicates. Loops and range are still checked.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, list)
    }

    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, edges }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.order()).collect())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Per-vertex neighbor bitmasks, available for graphs of at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect(),
        )
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.as_slice().last() {
            Some(&v) if v >= self.order() => Err(Error::invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.order()
            ))),
            _ => Ok(()),
        }
    }

    /// `N_G(S)`: the union of the neighbor lists; may intersect `S`.
    pub fn neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        let mut mark = vec![false; self.order()];
        for v in set.iter() {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        Ok(VertexSet(
            mark.iter()
                .enumerate()
                .filter_map(|(v, &m)| m.then_some(v))
                .collect(),
        ))
    }

    /// Induced subgraph on `keep` (sorted), relabelled to `0..keep.len()`
    /// preserving relative order. Returns the graph and the new→old id map.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (new_id[u], new_id[v]);
                (a != usize::MAX && b != usize::MAX).then_some((a, b))
            })
            .collect();
        (
            Graph::from_sorted_edges(keep.len(), edges),
            keep.as_slice().to_vec(),
        )
    }

    /// `G − S`, relabelled; see [`Graph::induced`].
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        let keep = VertexSet((0..self.order()).filter(|&v| !removed.contains(v)).collect());
        self.induced(&keep)
    }

    /// `G − E'` on the same vertex ids. Edges not present are ignored.
    pub fn remove_edges(&self, removed: &[Edge]) -> Graph {
        let mut drop: Vec<Edge> = removed.iter().map(|&(u, v)| edge(u, v)).collect();
        drop.sort_unstable();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| drop.binary_search(e).is_err())
            .collect();
        Graph::from_sorted_edges(self.order(), edges)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::empty())
    }

    /// Components of `G − S`, in original vertex ids.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        for v in removed.iter() {
            seen[v] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// `c₀(G − S)`.
    pub fn odd_component_count(&self, removed: &VertexSet) -> Result<usize> {
        self.check_set(removed)?;
        Ok(self
            .components_avoiding(removed)
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Bridges of the graph, sorted.
    pub fn bridges(&self) -> Vec<Edge> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (v, p, idx) = *top;
                if idx < self.adj[v].len() {
                    top.2 += 1;
                    let w = self.adj[v][idx];
                    if w == p {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if p != usize::MAX {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(edge(p, v));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `G1 ∪ G2` with the ids of `other` shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_sorted_edges(shift + other.order(), edges)
    }

    /// `G1 + G2`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        for u in 0..shift {
            for v in 0..other.order() {
                edges.push((u, v + shift));
            }
        }
        edges.sort_unstable();
        Graph::from_sorted_edges(shift + other.order(), edges)
    }

    pub fn vertex_connectivity(&self) -> usize {
        connectivity::vertex_connectivity(self)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        generators::cycle(n)
    }

    pub fn path(n: usize) -> Graph {
        generators::path(n)
    }

    pub fn complete(n: usize) -> Graph {
        generators::complete(n)
    }

    pub fn empty(n: usize) -> Graph {
        generators::empty(n)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        generators::complete_bipartite(a, b)
    }
}
