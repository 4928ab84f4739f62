//! Maximum-cardinality matching (Edmonds' blossom algorithm), k-matching
//! enumeration and perfect matchings under containment/avoidance constraints.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, VertexSet};

/// Default ceiling on matchings yielded by one [`KMatchings`] stream.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, sorted lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates that every edge is in `g` and that the edges are independent.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let m = Matching::from_edges_unchecked(edges);
        m.validate(g)?;
        Ok(m)
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub(crate) fn from_edges_unchecked(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.order()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(Error::invalid(format!("({u},{v}) is not an edge of the graph")));
            }
            if seen[u] || seen[v] {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) shares a vertex with another matching edge"
                )));
            }
            seen[u] = true;
            seen[v] = true;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `V(M)`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::new(self.edges.iter().flat_map(|&(u, v)| [u, v]).collect())
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.len() == g.order()
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from the exposed vertex `root`, contracting
    /// blossoms as they close. Returns the exposed endpoint of an augmenting path.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.order();
        // greedy start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.g.neighbors(v).iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for v in 0..n {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(mut u) = self.find_path(v) {
                while u != NONE {
                    let pv = self.parent[u];
                    let ppv = self.mate[pv];
                    self.mate[u] = pv;
                    self.mate[pv] = u;
                    u = ppv;
                }
            }
        }
        self.mate
    }
}

/// Mate array of a maximum matching: `mate[v]` is `Some(w)` when `vw` is matched.
pub fn maximum_mate(g: &Graph) -> Vec<Option<usize>> {
    Blossom::new(g)
        .run()
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

pub fn max_matching(g: &Graph) -> Matching {
    let mate = maximum_mate(g);
    Matching::from_edges_unchecked(
        mate.iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| (v, w))),
    )
}

/// `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).len()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * matching_number(g) == g.order()
}

/// Lazy stream of every `k`-matching of a graph in lexicographic order of the
/// sorted edge lists. Yields an error item once `limit` matchings have been
/// produced and more remain.
pub struct KMatchings<'g> {
    g: &'g Graph,
    k: usize,
    chosen: Vec<usize>,
    used: Vec<bool>,
    next: usize,
    yielded: u64,
    limit: u64,
    done: bool,
}

pub fn enumerate_k_matchings(g: &Graph, k: usize) -> KMatchings<'_> {
    KMatchings::new(g, k, DEFAULT_ENUMERATION_LIMIT)
}

impl<'g> KMatchings<'g> {
    pub fn new(g: &'g Graph, k: usize, limit: u64) -> Self {
        KMatchings {
            g,
            k,
            chosen: Vec::with_capacity(k),
            used: vec![false; g.order()],
            next: 0,
            yielded: 0,
            limit,
            done: false,
        }
    }

    fn pop(&mut self) -> bool {
        match self.chosen.pop() {
            Some(j) => {
                let (u, v) = self.g.edges()[j];
                self.used[u] = false;
                self.used[v] = false;
                self.next = j + 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for KMatchings<'_> {
    type Item = Result<Matching>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let edges = self.g.edges();
        while self.chosen.len() < self.k {
            let need = self.k - self.chosen.len();
            let last = edges.len().checked_sub(need);
            let found = last.and_then(|last| {
                (self.next..=last).find(|&i| {
                    let (u, v) = edges[i];
                    !self.used[u] && !self.used[v]
                })
            });
            match found {
                Some(i) => {
                    let (u, v) = edges[i];
                    self.used[u] = true;
                    self.used[v] = true;
                    self.chosen.push(i);
                    self.next = i + 1;
                }
                None => {
                    if !self.pop() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
        if self.yielded == self.limit {
            self.done = true;
            return Some(Err(Error::ResourceLimit {
                what: format!("{}-matching enumeration", self.k),
                limit: self.limit,
            }));
        }
        let m = Matching {
            edges: self.chosen.iter().map(|&i| edges[i]).collect(),
        };
        self.yielded += 1;
        if !self.pop() {
            // k = 0: the empty matching is the only one
            self.done = true;
        }
        Some(Ok(m))
    }
}

/// Some perfect matching `F ⊇ M` with `F ∩ N = ∅`, if one exists.
pub fn perfect_matching_containing_avoiding(
    g: &Graph,
    required: &Matching,
    forbidden: &[Edge],
) -> Result<Option<Matching>> {
    required.validate(g)?;
    for &(u, v) in forbidden {
        if !g.has_edge(u, v) {
            return Err(Error::invalid(format!("forbidden ({u},{v}) is not an edge")));
        }
        if required.contains_edge(u, v) {
            return Err(Error::invalid(format!(
                "edge ({u},{v}) is both required and forbidden"
            )));
        }
    }
    let (residue, map) = g.remove_edges(forbidden).remove_vertices(&required.vertices());
    let inner = max_matching(&residue);
    if !inner.is_perfect(&residue) {
        return Ok(None);
    }
    Ok(Some(Matching::from_edges_unchecked(
        required
            .edges()
            .iter()
            .copied()
            .chain(inner.edges().iter().map(|&(u, v)| (map[u], map[v]))),
    )))
}
