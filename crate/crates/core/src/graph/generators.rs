use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Edge, Graph};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub(super) fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub(super) fn path(n: usize) -> Graph {
    Graph::from_sorted_edges(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub(super) fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_sorted_edges(n, edges)
}

pub(super) fn empty(n: usize) -> Graph {
    Graph::from_sorted_edges(n, Vec::new())
}

/// `K_{a,b}` with the `a` side labelled first.
pub(super) fn complete_bipartite(a: usize, b: usize) -> Graph {
    empty(a).join(&empty(b))
}

/// Erdős–Rényi `G(n, p)`. One uniform draw in `0..den(p)` is made per vertex
/// pair in lexicographic order, so the output depends only on `(n, p, seed)`.
pub fn random_graph(n: usize, p: Rational, seed: u64) -> Result<Graph> {
    let (num, den) = match (p.numer(), p.denom()) {
        (Some(a), Some(b)) if a >= 0 && a <= b => (a as u64, b as u64),
        _ => return Err(Error::invalid(format!("edge probability {p} outside [0,1]"))),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..den) < num {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Uniform-ish `d`-regular graph via the pairing model with restarts.
/// Dense requests (`2d ≥ n`) take the complement of a sparse one.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n.max(1) || (n * d) % 2 == 1 {
        return Err(Error::invalid(format!("no {d}-regular graph on {n} vertices")));
    }
    if 2 * d >= n {
        let sparse = random_regular(n, n - 1 - d, seed)?;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !sparse.has_edge(u, v))
            .collect();
        return Ok(Graph::from_sorted_edges(n, edges));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    const ATTEMPTS: usize = 10_000;
    'attempt: for _ in 0..ATTEMPTS {
        points.shuffle(&mut rng);
        let mut edges: Vec<Edge> = Vec::with_capacity(n * d / 2);
        for pair in points.chunks_exact(2) {
            if pair[0] == pair[1] {
                continue 'attempt;
            }
            edges.push(super::edge(pair[0], pair[1]));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Ok(Graph::from_sorted_edges(n, edges));
    }
    Err(Error::ResourceLimit {
        what: format!("pairing-model attempts for {d}-regular graph on {n} vertices"),
        limit: ATTEMPTS as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_generators() {
        assert_eq!(complete(4).edge_count(), 6);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(cycle(2).is_err());
        assert_eq!(empty(3).edge_count(), 0);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_graph(5, Rational::zero(), 17).unwrap(), empty(5));
        assert_eq!(random_graph(5, Rational::one(), 17).unwrap(), complete(5));
        let half = Rational::new(1, 2);
        assert_eq!(
            random_graph(8, half, 99).unwrap(),
            random_graph(8, half, 99).unwrap()
        );
        assert!(random_graph(4, Rational::new(3, 2), 0).is_err());
    }

    #[test]
    fn regular_graphs_are_regular() {
        let g = random_regular(10, 3, 5).unwrap();
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(random_regular(5, 3, 0).is_err());
    }
}
